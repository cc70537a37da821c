#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gcpres/determinant.hpp"
#include "gcpres/errors.hpp"
#include "gcpres/poly.hpp"
#include "gcpres/resultant.hpp"
#include "gcpres/system.hpp"

namespace gcpres {

inline constexpr long kDefaultCoefficientBound = 10;

struct PerturbationProvenance {
  enum class Kind { User, SeededRandom } kind = Kind::User;
  std::uint64_t seed = 0;
  long coefficient_bound = 0;
};

/// p_1..p_n with deg p_i = d_i and no common zero except the origin.
struct PerturbationVector {
  std::vector<Poly> forms;
  PerturbationProvenance provenance;
  /// Row i holds the coefficients of l_i when p_i = l_i^d_i.
  std::optional<Matrix<Integer>> linear_forms;
  /// det of the linear-form matrix, or the resultant of the p_i.
  Rational certificate;
};

struct AdmissibilityResult {
  bool admissible = false;
  Rational certificate;
};

namespace detail {

inline void check_perturbation_shape(std::span<const Poly> p, const System& sys) {
  if (p.size() != sys.n()) throw UsageError("perturbation needs one form per x-variable");
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (auto v : sys.yvars)
      if (p[i].involves(v)) throw UsageError("perturbation form " + std::to_string(i + 1) + " depends on a parameter");
    if (p[i].involves(sys.epsilon)) throw UsageError("perturbation form depends on eps");
    const auto h = is_homogeneous(p[i], sys.xvars);
    if (!h.homogeneous || !h.degree || *h.degree != sys.degrees[i])
      throw UsageError("perturbation form " + std::to_string(i + 1) + " must be homogeneous of degree " +
                       std::to_string(sys.degrees[i]));
  }
}

}  // namespace detail

/// Admissibility via the linear-form determinant when available; otherwise via Res_x(p) over Q.
inline AdmissibilityResult is_admissible(std::span<const Poly> p, const System& sys,
                                         const std::optional<Matrix<Integer>>& linear_forms = std::nullopt) {
  detail::check_perturbation_shape(p, sys);
  Rational cert;
  if (linear_forms) {
    cert = Rational(det_fraction_free(*linear_forms));
  } else {
    cert = constant_resultant(p, sys);
  }
  return {cert != 0, cert};
}

inline AdmissibilityResult is_admissible(const PerturbationVector& p, const System& sys) {
  return is_admissible(p.forms, sys, p.linear_forms);
}

/// p_i = l_i^d_i for the linear forms given row-wise. Does not require admissibility; see certificate.
inline PerturbationVector perturbation_from_linear_forms(const System& sys, const Matrix<Integer>& coefficients,
                                                         PerturbationProvenance provenance = {}) {
  if (coefficients.rows() != sys.n() || coefficients.cols() != sys.n())
    throw UsageError("linear-form matrix must be n x n");
  PerturbationVector p;
  for (std::size_t i = 0; i < sys.n(); ++i) {
    Poly l(sys.ring);
    for (std::size_t j = 0; j < sys.n(); ++j) l += Poly::variable(sys.ring, sys.xvars[j]) * Rational(coefficients(i, j));
    p.forms.push_back(l.pow(sys.degrees[i]));
  }
  p.provenance = provenance;
  p.linear_forms = coefficients;
  p.certificate = Rational(det_fraction_free(coefficients));
  return p;
}

/// Supplies candidate linear-form matrices to the regeneration loop.
using LinearFormSource = std::function<Matrix<Integer>()>;

inline LinearFormSource seeded_linear_forms(std::size_t n, std::uint64_t seed, long coefficient_bound) {
  auto rng = std::make_shared<std::mt19937_64>(seed);
  return [n, rng, coefficient_bound] {
    const auto width = static_cast<std::uint64_t>(2 * coefficient_bound + 1);
    Matrix<Integer> m(n, n, Integer(0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<long>((*rng)() % width) - coefficient_bound;
    return m;
  };
}

inline constexpr std::size_t kMaxPerturbationDraws = 1000;

/// Draws from `source` until the linear forms are independent.
inline PerturbationVector random_admissible_perturbation(const System& sys, const LinearFormSource& source,
                                                         PerturbationProvenance provenance = {}) {
  for (std::size_t attempt = 0; attempt < kMaxPerturbationDraws; ++attempt) {
    PerturbationVector p = perturbation_from_linear_forms(sys, source(), provenance);
    if (p.certificate != 0) return p;
  }
  throw InternalError("no admissible perturbation after " + std::to_string(kMaxPerturbationDraws) + " draws");
}

inline PerturbationVector random_admissible_perturbation(const System& sys, std::uint64_t seed,
                                                         long coefficient_bound = kDefaultCoefficientBound) {
  if (coefficient_bound < 1) throw UsageError("coefficient bound must be at least 1");
  return random_admissible_perturbation(sys, seeded_linear_forms(sys.n(), seed, coefficient_bound),
                                        {PerturbationProvenance::Kind::SeededRandom, seed, coefficient_bound});
}

/// User-supplied forms, certified through the resultant.
inline PerturbationVector user_perturbation(const System& sys, std::vector<Poly> forms) {
  const auto check = is_admissible(forms, sys);
  if (!check.admissible) throw UsageError("perturbation is not admissible (its forms share a nonzero root)");
  PerturbationVector p;
  p.forms = std::move(forms);
  p.certificate = check.certificate;
  return p;
}

struct GcpResult {
  std::size_t valuation = 0;
  NormalizedPoly polynomial;
  PerturbationVector perturbation;
  ResultantMethod method = ResultantMethod::Sylvester;
};

/// Lowest-order eps coefficient of Res_x(f + eps p), normalized.
inline GcpResult gcp(const System& sys, const PerturbationVector& p, const ResultantOptions& options = {}) {
  if (!is_admissible(p, sys).admissible) throw UsageError("perturbation is not admissible");
  const Poly eps = Poly::variable(sys.ring, sys.epsilon);
  std::vector<Poly> perturbed;
  for (std::size_t i = 0; i < sys.n(); ++i) perturbed.push_back(sys.forms[i] + eps * p.forms[i]);

  const ResultantValue res = resultant(sys, std::span<const Poly>(perturbed), options);
  const Poly& r = res.value.poly();
  if (r.is_zero()) throw InternalError("resultant of an admissibly perturbed system vanished identically");

  std::size_t s = r.terms().begin()->first[sys.epsilon];
  for (const auto& [m, c] : r.terms()) s = std::min<std::size_t>(s, m[sys.epsilon]);
  Poly lowest(sys.ring);
  for (const auto& [m, c] : r.terms()) {
    if (m[sys.epsilon] != s) continue;
    Monomial rest = m;
    rest.set(sys.epsilon, 0);
    lowest.add_term(rest, c);
  }
  return {s, normalize(lowest), p, res.method};
}

/// sum_i prod_{j != i} d_j, the largest eps-degree the resultant can have.
inline std::size_t valuation_bound(const System& sys) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < sys.n(); ++i) {
    std::size_t w = 1;
    for (std::size_t j = 0; j < sys.n(); ++j)
      if (j != i) w *= sys.degrees[j];
    total += w;
  }
  return total;
}

}  // namespace gcpres
