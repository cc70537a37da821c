#pragma once

#include <string>
#include <vector>

#include "gcpres/gcd.hpp"
#include "gcpres/poly.hpp"

namespace gcpres {

inline std::string format_rational(const Rational& q) { return q.get_str(); }

/// Product of powers, e.g. "x1^2*y"; "1" for the unit monomial.
inline std::string format_monomial(const Monomial& m, const VariableSet& vars) {
  std::string out;
  for (std::size_t v = 0; v < m.size(); ++v) {
    if (m[v] == 0) continue;
    if (!out.empty()) out += '*';
    out += vars.name(v);
    if (m[v] > 1) out += '^' + std::to_string(m[v]);
  }
  return out.empty() ? "1" : out;
}

/// Canonical rendering: graded-lex descending, integer or reduced rational coefficients,
/// explicit '*', unit coefficients omitted. Parses back to the same polynomial.
inline std::string format_poly(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = c < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (m.is_one()) {
      out += format_rational(magnitude);
    } else if (magnitude == 1) {
      out += format_monomial(m, *p.ring());
    } else {
      out += format_rational(magnitude) + '*' + format_monomial(m, *p.ring());
    }
  }
  return out;
}

inline std::string format_poly(const NormalizedPoly& p) { return format_poly(p.poly()); }

/// "(y - 1)^2*(y + 2)"; "1" for the empty decomposition.
inline std::string format_factored(const std::vector<SquarefreeFactor>& factors) {
  if (factors.empty()) return "1";
  std::string out;
  for (const auto& f : factors) {
    if (!out.empty()) out += '*';
    out += '(' + format_poly(f.factor) + ')';
    if (f.multiplicity > 1) out += '^' + std::to_string(f.multiplicity);
  }
  return out;
}

}  // namespace gcpres
