#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "gcpres/poly.hpp"

namespace gcpres {

namespace detail {

inline Poly one_like(const Poly& p) { return Poly(p.ring(), 1); }

/// Index of the single variable of p, or nullopt when p is constant or multivariate.
inline std::optional<std::size_t> sole_variable(const Poly& p) {
  auto vars = p.support();
  if (vars.size() == 1) return vars.front();
  return std::nullopt;
}

inline Poly make_monic(const Poly& p) {
  Poly r = p;
  r *= 1 / p.leading_coefficient();
  return r;
}

/// Euclid over Q for polynomials in one variable (either may be constant).
inline Poly univariate_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divide(a, b).remainder;
    a = std::move(b);
    b = r.is_zero() ? std::move(r) : make_monic(r);
  }
  return a;
}

/// Pseudo-remainder of a by b as polynomials in `variable`, up to a factor free of `variable`.
inline Poly pseudo_remainder(const Poly& a, const Poly& b, std::size_t variable) {
  const std::size_t db = *b.degree_in(variable);
  const auto bc = coefficients_in(b, variable);
  const Poly& lc = bc.back();
  Monomial vm(a.ring()->size());
  Poly r = a;
  while (!r.is_zero() && *r.degree_in(variable) >= db) {
    const std::size_t dr = *r.degree_in(variable);
    const Poly lr = coefficients_in(r, variable).back();
    vm.set(variable, static_cast<Exponent>(dr - db));
    r = lc * r - lr * Poly::monomial(a.ring(), vm, 1) * b;
  }
  return r;
}

inline Poly gcd_recursive(const Poly& a, const Poly& b);

/// GCD of the coefficients of p with respect to `variable`, normalized.
inline Poly content_in(const Poly& p, std::size_t variable) {
  Poly g(p.ring());
  for (const auto& c : coefficients_in(p, variable)) {
    if (c.is_zero()) continue;
    g = gcd_recursive(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

inline Poly primitive_in(const Poly& p, std::size_t variable) {
  if (p.is_zero()) return p;
  return divide_exact(p, content_in(p, variable));
}

inline Poly gcd_recursive(const Poly& a, const Poly& b) {
  if (a.is_zero()) return normalize(b).poly();
  if (b.is_zero()) return normalize(a).poly();
  if (a.is_constant() || b.is_constant()) return one_like(a);

  auto va = sole_variable(a);
  auto vb = sole_variable(b);
  if (va && vb && *va == *vb) return normalize(univariate_gcd(a, b)).poly();

  const auto sa = a.support();
  const auto sb = b.support();
  const std::size_t v = std::min(sa.front(), sb.front());
  if (!a.involves(v)) return gcd_recursive(a, content_in(b, v));
  if (!b.involves(v)) return gcd_recursive(content_in(a, v), b);

  const Poly ca = content_in(a, v);
  const Poly cb = content_in(b, v);
  const Poly c = gcd_recursive(ca, cb);

  Poly r0 = divide_exact(a, ca);
  Poly r1 = divide_exact(b, cb);
  if (*r0.degree_in(v) < *r1.degree_in(v)) std::swap(r0, r1);
  while (!r1.is_zero()) {
    Poly r = pseudo_remainder(r0, r1, v);
    r0 = std::move(r1);
    r1 = r.is_zero() ? std::move(r) : primitive_in(r, v);
  }
  return normalize(c * primitive_in(r0, v)).poly();
}

}  // namespace detail

/// Exact GCD over Q, normalized. gcd(a, 0) = normalize(a).
inline NormalizedPoly gcd_poly(const Poly& a, const Poly& b) { return normalize(detail::gcd_recursive(a, b)); }

inline NormalizedPoly gcd_poly(std::span<const Poly> polys) {
  Poly g;
  for (const auto& p : polys) {
    g = detail::gcd_recursive(g, p);
    if (g.is_constant() && !g.is_zero()) break;
  }
  return normalize(g);
}

struct ContentSplit {
  Poly content;    // free of the main variables, normalized
  Poly primitive;  // p / content
};

/// Content of p regarded as a polynomial in `main_vars` with coefficients in the remaining variables.
inline ContentSplit content_primitive(const Poly& p, std::span<const std::size_t> main_vars) {
  if (p.is_zero()) return {p, p};
  std::vector<Poly> coeffs;
  for (auto& [m, c] : coefficients_in(p, main_vars)) coeffs.push_back(c);
  Poly content = gcd_poly(coeffs).poly();
  return {content, divide_exact(p, content)};
}

struct SquarefreeFactor {
  NormalizedPoly factor;
  std::size_t multiplicity;

  friend bool operator==(const SquarefreeFactor&, const SquarefreeFactor&) = default;
};

/// Yun decomposition of a univariate polynomial, ordered by decreasing multiplicity.
/// A nonzero constant has the empty decomposition.
inline std::vector<SquarefreeFactor> squarefree_decomposition(const Poly& p) {
  if (p.is_zero()) throw UsageError("squarefree decomposition of the zero polynomial");
  std::vector<SquarefreeFactor> out;
  if (p.is_constant()) return out;
  const auto var = detail::sole_variable(p);
  if (!var) throw UsageError("squarefree decomposition requires a univariate polynomial");

  const Poly f = normalize(p).poly();
  const Poly df = derivative(f, *var);
  const Poly a0 = gcd_poly(f, df).poly();
  Poly b = divide_exact(f, a0);
  Poly c = divide_exact(df, a0);
  Poly d = c - derivative(b, *var);
  for (std::size_t i = 1; !b.is_constant(); ++i) {
    const Poly a = gcd_poly(b, d).poly();
    if (!a.is_constant()) out.push_back({normalize(a), i});
    b = divide_exact(b, a);
    c = divide_exact(d, a);
    d = c - derivative(b, *var);
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const SquarefreeFactor& x, const SquarefreeFactor& y) { return x.multiplicity > y.multiplicity; });
  return out;
}

/// Product of the distinct squarefree factors; 1 for a nonzero constant.
inline NormalizedPoly squarefree_part(const Poly& p) {
  Poly r(p.ring(), 1);
  for (const auto& f : squarefree_decomposition(p)) r *= f.factor.poly();
  return normalize(r);
}

}  // namespace gcpres
