#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gcpres/errors.hpp"

namespace gcpres {

using Integer = mpz_class;
using Rational = mpq_class;
using Exponent = std::uint32_t;

/// Total degree of a polynomial; std::nullopt stands for the degree of the zero polynomial (minus infinity).
using Degree = std::optional<std::size_t>;

inline Rational power(const Rational& base, std::size_t exponent) {
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
  // base is canonical, so num/den is already reduced with positive denominator.
  return Rational(num, den);
}

/// Ordered list of variable names shared by every polynomial of one system.
class VariableSet {
 public:
  explicit VariableSet(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (names_[i] == names_[j]) throw UsageError("duplicate variable '" + names_[i] + "'");
  }

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t index) const { return names_.at(index); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  std::optional<std::size_t> find(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return i;
    return std::nullopt;
  }

  std::size_t index(std::string_view name) const {
    if (auto i = find(name)) return *i;
    throw UsageError("unknown variable '" + std::string(name) + "'");
  }

  friend bool operator==(const VariableSet&, const VariableSet&) = default;

 private:
  std::vector<std::string> names_;
};

using Ring = std::shared_ptr<const VariableSet>;

inline Ring make_ring(std::vector<std::string> names) {
  return std::make_shared<const VariableSet>(std::move(names));
}

inline bool same_ring(const Ring& a, const Ring& b) { return a == b || (a && b && *a == *b); }

/// Exponent vector over a ring's variables, with the total degree cached.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t variables) : exponents_(variables, 0) {}
  explicit Monomial(std::vector<Exponent> exponents) : exponents_(std::move(exponents)) {
    for (auto e : exponents_) degree_ += e;
  }

  std::size_t size() const noexcept { return exponents_.size(); }
  Exponent operator[](std::size_t i) const { return exponents_[i]; }
  const std::vector<Exponent>& exponents() const noexcept { return exponents_; }
  std::size_t total_degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }

  void set(std::size_t i, Exponent e) {
    degree_ = degree_ - exponents_[i] + e;
    exponents_[i] = e;
  }

  std::size_t degree_in(std::span<const std::size_t> variables) const {
    std::size_t d = 0;
    for (auto v : variables) d += exponents_[v];
    return d;
  }

  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < exponents_.size(); ++i)
      if (exponents_[i] > other.exponents_[i]) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::size_t i = 0; i < r.exponents_.size(); ++i) r.exponents_[i] += b.exponents_[i];
    r.degree_ += b.degree_;
    return r;
  }

  /// Requires b.divides(a).
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::size_t i = 0; i < r.exponents_.size(); ++i) r.exponents_[i] -= b.exponents_[i];
    r.degree_ -= b.degree_;
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exponents_ == b.exponents_; }

 private:
  std::vector<Exponent> exponents_;
  std::size_t degree_ = 0;
};

/// Graded lexicographic order, larger first; earlier variables dominate within a degree.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.total_degree() != b.total_degree()) return a.total_degree() > b.total_degree();
    return a.exponents() > b.exponents();
  }
};

/// Sparse multivariate polynomial with rational coefficients. No zero coefficient is ever stored.
///
/// A default-constructed Poly is a ring-less zero; it adopts the ring of the other operand in
/// arithmetic so that containers of polynomials can be value-initialized.
class Poly {
 public:
  using Terms = std::map<Monomial, Rational, GrlexGreater>;

  Poly() = default;
  explicit Poly(Ring ring) : ring_(std::move(ring)) {}
  Poly(Ring ring, const Rational& constant) : ring_(std::move(ring)) {
    if (constant != 0) terms_.emplace(Monomial(ring_->size()), constant);
  }

  static Poly variable(const Ring& ring, std::size_t index) {
    if (index >= ring->size()) throw UsageError("variable index out of range");
    Monomial m(ring->size());
    m.set(index, 1);
    return monomial(ring, std::move(m), 1);
  }

  static Poly variable(const Ring& ring, std::string_view name) { return variable(ring, ring->index(name)); }

  static Poly monomial(const Ring& ring, Monomial m, const Rational& c) {
    Poly p(ring);
    if (m.size() != ring->size()) throw UsageError("monomial arity does not match ring");
    if (c != 0) p.terms_.emplace(std::move(m), c);
    return p;
  }

  const Ring& ring() const noexcept { return ring_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

  Rational constant_term() const {
    if (terms_.empty()) return 0;
    auto last = std::prev(terms_.end());
    return last->first.is_one() ? last->second : Rational(0);
  }

  const Monomial& leading_monomial() const {
    if (terms_.empty()) throw UsageError("leading monomial of zero polynomial");
    return terms_.begin()->first;
  }

  const Rational& leading_coefficient() const {
    if (terms_.empty()) throw UsageError("leading coefficient of zero polynomial");
    return terms_.begin()->second;
  }

  Degree total_degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first.total_degree();
  }

  Degree degree_in(std::size_t variable) const {
    if (terms_.empty()) return std::nullopt;
    std::size_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max<std::size_t>(d, m[variable]);
    return d;
  }

  Degree degree_in(std::span<const std::size_t> variables) const {
    if (terms_.empty()) return std::nullopt;
    std::size_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree_in(variables));
    return d;
  }

  bool involves(std::size_t variable) const {
    for (const auto& [m, c] : terms_)
      if (m[variable] != 0) return true;
    return false;
  }

  /// Indices of the variables that occur with positive exponent, ascending.
  std::vector<std::size_t> support() const {
    std::vector<std::size_t> vars;
    if (!ring_) return vars;
    for (std::size_t v = 0; v < ring_->size(); ++v)
      if (involves(v)) vars.push_back(v);
    return vars;
  }

  void add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }

  Poly& operator+=(const Poly& other) {
    adopt(other);
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
  }

  Poly& operator-=(const Poly& other) {
    adopt(other);
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
  }

  Poly& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [m, c] : terms_) c *= s;
    }
    return *this;
  }

  Poly& operator*=(const Poly& other) { return *this = *this * other; }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r(a.ring_ ? a.ring_ : b.ring_);
    r.adopt(a);
    r.adopt(b);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }

  Poly pow(std::size_t exponent) const {
    Poly result(ring_, 1);
    Poly base = *this;
    while (exponent > 0) {
      if (exponent & 1U) result *= base;
      exponent >>= 1U;
      if (exponent > 0) base *= base;
    }
    return result;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    if (!a.terms_.empty() && !same_ring(a.ring_, b.ring_)) return false;
    return std::equal(a.terms_.begin(), a.terms_.end(), b.terms_.begin(),
                      [](const auto& x, const auto& y) { return x.first == y.first && x.second == y.second; });
  }

 private:
  void adopt(const Poly& other) {
    if (!other.ring_) {
      if (!other.terms_.empty()) throw InternalError("ring-less polynomial with terms");
      return;
    }
    if (!ring_) {
      ring_ = other.ring_;
      return;
    }
    if (!same_ring(ring_, other.ring_)) throw UsageError("polynomials over different variable orders");
  }

  Ring ring_;
  Terms terms_;
};

/// Substitutes rational values for some variables; the rest stay symbolic.
inline Poly evaluate(const Poly& p, const std::map<std::size_t, Rational>& assignment) {
  Poly r(p.ring());
  for (const auto& [m, c] : p.terms()) {
    Rational coeff = c;
    Monomial rest = m;
    for (const auto& [var, value] : assignment) {
      if (var >= m.size()) throw UsageError("assigned variable not in ring");
      if (m[var] == 0) continue;
      coeff *= power(value, m[var]);
      rest.set(var, 0);
    }
    r.add_term(rest, coeff);
  }
  return r;
}

inline Poly evaluate(const Poly& p, const std::map<std::string, Rational>& assignment) {
  std::map<std::size_t, Rational> by_index;
  for (const auto& [name, value] : assignment) by_index.emplace(p.ring()->index(name), value);
  return evaluate(p, by_index);
}

/// Full evaluation; `values` is indexed by ring position.
inline Rational evaluate_at(const Poly& p, std::span<const Rational> values) {
  Rational sum = 0;
  for (const auto& [m, c] : p.terms()) {
    Rational t = c;
    for (std::size_t v = 0; v < m.size(); ++v)
      if (m[v] != 0) t *= power(values[v], m[v]);
    sum += t;
  }
  return sum;
}

/// Replaces `variable` by `value` everywhere.
inline Poly substitute(const Poly& p, std::size_t variable, const Poly& value) {
  std::vector<Poly> powers{Poly(p.ring(), 1)};
  Poly r(p.ring());
  for (const auto& [m, c] : p.terms()) {
    const Exponent e = m[variable];
    while (powers.size() <= e) powers.push_back(powers.back() * value);
    Monomial rest = m;
    rest.set(variable, 0);
    r += Poly::monomial(p.ring(), rest, c) * powers[e];
  }
  return r;
}

/// Simultaneous substitution variable[k] -> values[k].
inline Poly substitute(const Poly& p, std::span<const std::size_t> variables, std::span<const Poly> values) {
  if (variables.size() != values.size()) throw UsageError("substitution arity mismatch");
  Poly r(p.ring());
  for (const auto& [m, c] : p.terms()) {
    Monomial rest = m;
    Poly t(p.ring(), 1);
    for (std::size_t k = 0; k < variables.size(); ++k) {
      if (m[variables[k]] == 0) continue;
      t *= values[k].pow(m[variables[k]]);
      rest.set(variables[k], 0);
    }
    r += t * Poly::monomial(p.ring(), rest, c);
  }
  return r;
}

inline Poly derivative(const Poly& p, std::size_t variable) {
  Poly r(p.ring());
  for (const auto& [m, c] : p.terms()) {
    const Exponent e = m[variable];
    if (e == 0) continue;
    Monomial d = m;
    d.set(variable, e - 1);
    r.add_term(d, c * static_cast<unsigned long>(e));
  }
  return r;
}

/// Coefficients of p viewed as a univariate polynomial in `variable`; entry k multiplies variable^k.
inline std::vector<Poly> coefficients_in(const Poly& p, std::size_t variable) {
  std::vector<Poly> coeffs;
  if (p.is_zero()) return coeffs;
  coeffs.assign(*p.degree_in(variable) + 1, Poly(p.ring()));
  for (const auto& [m, c] : p.terms()) {
    Monomial rest = m;
    rest.set(variable, 0);
    coeffs[m[variable]].add_term(rest, c);
  }
  return coeffs;
}

/// Splits p = sum over block monomials u of u * coeff(u), where coeff(u) is free of the block.
/// Keys carry exponents only on the block variables.
inline std::map<Monomial, Poly, GrlexGreater> coefficients_in(const Poly& p, std::span<const std::size_t> block) {
  std::map<Monomial, Poly, GrlexGreater> out;
  for (const auto& [m, c] : p.terms()) {
    Monomial key(m.size());
    Monomial rest = m;
    for (auto v : block) {
      key.set(v, m[v]);
      rest.set(v, 0);
    }
    auto it = out.try_emplace(std::move(key), Poly(p.ring())).first;
    it->second.add_term(rest, c);
  }
  return out;
}

struct DivisionResult {
  Poly quotient;
  Poly remainder;
};

/// Multivariate division by a single divisor in graded-lex order.
inline DivisionResult divide(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw UsageError("division by zero polynomial");
  DivisionResult r{Poly(a.ring() ? a.ring() : b.ring()), Poly(a.ring() ? a.ring() : b.ring())};
  Poly rest = a;
  const Monomial& lm = b.leading_monomial();
  const Rational& lc = b.leading_coefficient();
  while (!rest.is_zero()) {
    const Monomial m = rest.leading_monomial();
    const Rational c = rest.leading_coefficient();
    if (lm.divides(m)) {
      Poly t = Poly::monomial(b.ring(), m / lm, c / lc);
      rest -= t * b;
      r.quotient += t;
    } else {
      r.remainder.add_term(m, c);
      rest.add_term(m, -c);
    }
  }
  return r;
}

inline std::optional<Poly> try_divide_exact(const Poly& a, const Poly& b) {
  auto [q, rem] = divide(a, b);
  if (!rem.is_zero()) return std::nullopt;
  return q;
}

inline Poly divide_exact(const Poly& a, const Poly& b) {
  if (auto q = try_divide_exact(a, b)) return *q;
  throw InternalError("inexact polynomial division");
}

struct HomogeneityCheck {
  bool homogeneous;
  Degree degree;  // common degree when homogeneous
};

inline HomogeneityCheck is_homogeneous(const Poly& p, std::span<const std::size_t> variables) {
  if (p.is_zero()) return {true, std::nullopt};
  const std::size_t d = p.terms().begin()->first.degree_in(variables);
  for (const auto& [m, c] : p.terms())
    if (m.degree_in(variables) != d) return {false, std::nullopt};
  return {true, d};
}

/// Multiplies each term by fresh^(deg_x p - deg_x term); setting fresh = 1 recovers p.
inline Poly homogenize(const Poly& p, std::span<const std::size_t> xvars, std::size_t fresh) {
  if (std::find(xvars.begin(), xvars.end(), fresh) != xvars.end() || p.involves(fresh))
    throw UsageError("homogenizing variable '" + p.ring()->name(fresh) + "' already occurs in the polynomial");
  if (p.is_zero()) return p;
  const std::size_t d = *p.degree_in(xvars);
  Poly r(p.ring());
  for (const auto& [m, c] : p.terms()) {
    Monomial h = m;
    h.set(fresh, static_cast<Exponent>(d - m.degree_in(xvars)));
    r.add_term(h, c);
  }
  return r;
}

/// Polynomial with integer coefficients, content 1, positive graded-lex leading coefficient.
class NormalizedPoly {
 public:
  NormalizedPoly() = default;

  const Poly& poly() const noexcept { return poly_; }
  bool is_zero() const noexcept { return poly_.is_zero(); }
  bool is_one() const { return poly_.is_constant() && !poly_.is_zero(); }
  Degree total_degree() const { return poly_.total_degree(); }

  friend bool operator==(const NormalizedPoly& a, const NormalizedPoly& b) { return a.poly_ == b.poly_; }
  friend NormalizedPoly normalize(const Poly& p);

 private:
  explicit NormalizedPoly(Poly p) : poly_(std::move(p)) {}
  Poly poly_;
};

inline NormalizedPoly normalize(const Poly& p) {
  if (p.is_zero()) return NormalizedPoly(p);
  Integer den = 1;
  Integer num = 0;
  for (const auto& [m, c] : p.terms()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
  }
  Rational scale(den, num);
  scale.canonicalize();
  if (p.leading_coefficient() < 0) scale = -scale;
  Poly r = p;
  r *= scale;
  return NormalizedPoly(std::move(r));
}

}  // namespace gcpres
