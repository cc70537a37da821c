#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "gcpres/errors.hpp"
#include "gcpres/gcd.hpp"
#include "gcpres/gcp.hpp"
#include "gcpres/resultant.hpp"
#include "gcpres/system.hpp"

namespace gcpres {

/// Seed used when the caller does not pick one, so that runs are reproducible.
inline constexpr std::uint64_t kDefaultSeed = 1729;

struct PresOptions {
  std::size_t trials = 2;
  std::uint64_t seed = kDefaultSeed;
  long coefficient_bound = kDefaultCoefficientBound;
  ResultantOptions resultant;
};

struct TrialRecord {
  std::uint64_t seed = 0;
  std::size_t valuation = 0;
  Degree cres_degree;
  Degree gcd_degree;  // running GCD after folding this trial in
  bool confirmation = false;
};

struct PresResult {
  NormalizedPoly gcd;
  /// Squarefree decomposition of gcd; empty when gcd is constant or has several variables.
  std::vector<SquarefreeFactor> factors;
  std::size_t trials = 0;  // not counting the confirmation trial
  std::vector<TrialRecord> record;
  std::vector<NormalizedPoly> cres;
  bool agreement = false;
};

inline std::vector<SquarefreeFactor> univariate_factors(const NormalizedPoly& p) {
  if (p.is_zero() || p.poly().support().size() > 1) return {};
  return squarefree_decomposition(p.poly());
}

/// GCD of `trials` generalized characteristic polynomials for independent random perturbations,
/// followed by one confirmation trial that is folded in as well.
inline PresResult pres(const System& sys, const PresOptions& options = {}) {
  if (options.trials < 2) throw UsageError("pres needs at least two trials");
  std::mt19937_64 seeds(options.seed);
  PresResult out;
  out.trials = options.trials;
  Poly running;
  NormalizedPoly before_confirmation;
  for (std::size_t t = 0; t <= options.trials; ++t) {
    const bool confirmation = t == options.trials;
    if (confirmation) before_confirmation = normalize(running);
    const std::uint64_t trial_seed = seeds();
    const auto p = random_admissible_perturbation(sys, trial_seed, options.coefficient_bound);
    GcpResult c = gcp(sys, p, options.resultant);
    running = gcd_poly(running, c.polynomial.poly()).poly();
    out.record.push_back({trial_seed, c.valuation, c.polynomial.total_degree(), running.total_degree(), confirmation});
    out.cres.push_back(std::move(c.polynomial));
  }
  out.gcd = normalize(running);
  out.agreement = out.gcd == before_confirmation;
  out.factors = univariate_factors(out.gcd);
  return out;
}

/// Zero set of PRes predicted for n = 2, m = 1, as a squarefree polynomial in y.
struct PlanarZeroSet {
  NormalizedPoly zero_set;
  NormalizedPoly content_part;   // roots y* with (y - y*) | gcd(f1, f2)
  NormalizedPoly cofactor_part;  // y-coordinates of common roots of the cofactors
};

inline PlanarZeroSet planar_oracle(const System& sys) {
  if (sys.n() != 2 || sys.m() != 1) throw UsageError("planar oracle needs two x-variables and one parameter");
  const Poly g = gcd_poly(sys.forms[0], sys.forms[1]).poly();
  const Poly h1 = divide_exact(sys.forms[0], g);
  const Poly h2 = divide_exact(sys.forms[1], g);
  const std::size_t dg = g.degree_in(sys.xvars).value_or(0);

  const Poly content = content_primitive(g, sys.xvars).content;
  const NormalizedPoly a = squarefree_part(content);
  const Poly cofactor_res =
      sylvester_determinant(h1, h2, sys.xvars[0], sys.xvars[1], sys.degrees[0] - dg, sys.degrees[1] - dg);
  if (cofactor_res.is_zero()) throw InternalError("coprime cofactors with vanishing resultant");
  const NormalizedPoly b = squarefree_part(cofactor_res);
  return {squarefree_part(a.poly() * b.poly()), a, b};
}

/// Same roots over the algebraic closure, multiplicities ignored.
inline bool zero_set_equal(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) throw UsageError("zero set comparison of the zero polynomial");
  return squarefree_part(a) == squarefree_part(b);
}

}  // namespace gcpres
