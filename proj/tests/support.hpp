#pragma once

#include <cstdint>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "gcpres/gcpres.hpp"

namespace gcpres {

inline void PrintTo(const Poly& p, std::ostream* os) { *os << format_poly(p); }
inline void PrintTo(const NormalizedPoly& p, std::ostream* os) { *os << format_poly(p); }

}  // namespace gcpres

namespace gcpres::testing {

inline Poly P(const Ring& ring, std::string_view text) { return parse_poly(text, ring); }

inline System load(std::string_view text) { return parse_and_validate(text); }

inline std::string fixture_path(const std::string& name) { return std::string(GCPRES_SYSTEMS_DIR) + "/" + name; }

class Random {
 public:
  explicit Random(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }
  Rational rational(long bound, long max_den = 1) {
    Rational q(Integer(integer(-bound, bound)), Integer(integer(1, max_den)));
    q.canonicalize();
    return q;
  }
  std::mt19937_64& engine() { return rng_; }

  /// Dense-ish random polynomial in `vars` with total degree <= max_degree.
  Poly poly(const Ring& ring, const std::vector<std::size_t>& vars, std::size_t max_degree, std::size_t terms,
            long bound = 5, long max_den = 1) {
    Poly p(ring);
    for (std::size_t t = 0; t < terms; ++t) {
      Monomial m(ring->size());
      std::size_t budget = integer(0, static_cast<long>(max_degree));
      for (auto v : vars) {
        const auto e = static_cast<std::size_t>(integer(0, static_cast<long>(budget)));
        m.set(v, static_cast<Exponent>(e));
        budget -= e;
      }
      p.add_term(m, rational(bound, max_den));
    }
    return p;
  }

  /// Random univariate polynomial in `var` of degree <= max_degree.
  Poly univariate(const Ring& ring, std::size_t var, std::size_t max_degree, long bound = 5) {
    Poly p(ring);
    for (std::size_t k = 0; k <= max_degree; ++k) {
      Monomial m(ring->size());
      m.set(var, static_cast<Exponent>(k));
      p.add_term(m, Rational(integer(-bound, bound)));
    }
    return p;
  }

  /// Binary form of exact x-degree d in (x0, x1) with coefficients in Q[y] of degree <= dy.
  Poly binary_form(const System& sys, std::size_t d, std::size_t dy, long bound = 5) {
    for (;;) {
      Poly f(sys.ring);
      for (std::size_t k = 0; k <= d; ++k) {
        Monomial m(sys.ring->size());
        m.set(sys.xvars[0], static_cast<Exponent>(d - k));
        m.set(sys.xvars[1], static_cast<Exponent>(k));
        f += Poly::monomial(sys.ring, m, 1) * univariate(sys.ring, sys.yvars[0], dy, bound);
      }
      if (!f.is_zero() && f.degree_in(sys.xvars) == Degree(d)) return f;
    }
  }

 private:
  std::mt19937_64 rng_;
};

/// Ring x1, x2, y, eps with an empty placeholder system for building random forms.
inline System planar_shell(std::size_t d1 = 1, std::size_t d2 = 1) {
  auto ring = system_ring({"x1", "x2"}, {"y"});
  return make_system(ring, 2, {Poly::variable(ring, 0).pow(d1), Poly::variable(ring, 1).pow(d2)});
}

}  // namespace gcpres::testing
