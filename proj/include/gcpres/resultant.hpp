#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "gcpres/determinant.hpp"
#include "gcpres/errors.hpp"
#include "gcpres/poly.hpp"
#include "gcpres/system.hpp"

namespace gcpres {

enum class ResultantMethod { Sylvester, MacaulayDirect, MacaulayInterpolated };

inline std::string_view to_string(ResultantMethod m) {
  switch (m) {
    case ResultantMethod::Sylvester: return "sylvester";
    case ResultantMethod::MacaulayDirect: return "macaulay-direct";
    case ResultantMethod::MacaulayInterpolated: return "macaulay-interpolated";
  }
  return "unknown";
}

struct ResultantValue {
  NormalizedPoly value;
  ResultantMethod method = ResultantMethod::Sylvester;
  /// Set when the Macaulay route had to change x-coordinates; row j gives x_j in the new coordinates.
  std::optional<Matrix<Integer>> coordinate_change;
};

enum class ResultantRoute { Automatic, Sylvester, Macaulay };

struct ResultantOptions {
  ResultantRoute route = ResultantRoute::Automatic;
  /// For n = 2, also run the Macaulay route and require agreement.
  bool cross_check = false;
  /// Seeds verification points and coordinate changes.
  std::uint64_t seed = 0x243f6a8885a308d3ULL;
  std::size_t verification_points = 3;
  std::size_t max_coordinate_changes = 5;
};

// ---------------------------------------------------------------------------
// Sylvester route

namespace detail {

/// Coefficients a_0..a_d of a binary form sum_k a_k x0^(d-k) x1^k of formal degree d.
inline std::vector<Poly> binary_coefficients(const Poly& f, std::size_t x0, std::size_t x1, std::size_t degree) {
  std::vector<Poly> a(degree + 1, Poly(f.ring()));
  for (const auto& [m, c] : f.terms()) {
    if (m[x0] + m[x1] != degree) throw UsageError("binary form does not have the stated x-degree");
    Monomial rest = m;
    rest.set(x0, 0);
    rest.set(x1, 0);
    a[m[x1]].add_term(rest, c);
  }
  return a;
}

}  // namespace detail

/// (d1+d2) x (d1+d2) Sylvester matrix of two binary forms with formal degrees d1, d2.
inline Matrix<Poly> sylvester_matrix(const Poly& f, const Poly& g, std::size_t x0, std::size_t x1, std::size_t d1,
                                     std::size_t d2) {
  const Ring& ring = f.ring() ? f.ring() : g.ring();
  const auto a = detail::binary_coefficients(f, x0, x1, d1);
  const auto b = detail::binary_coefficients(g, x0, x1, d2);
  const std::size_t n = d1 + d2;
  Matrix<Poly> s(n, n, Poly(ring));
  for (std::size_t i = 0; i < d2; ++i)
    for (std::size_t k = 0; k <= d1; ++k) s(i, i + k) = a[k];
  for (std::size_t i = 0; i < d1; ++i)
    for (std::size_t k = 0; k <= d2; ++k) s(d2 + i, i + k) = b[k];
  return s;
}

/// Raw Sylvester determinant; zero exactly at parameter values where the forms (formal degrees) share a root in P^1.
inline Poly sylvester_determinant(const Poly& f, const Poly& g, std::size_t x0, std::size_t x1, std::size_t d1,
                                  std::size_t d2) {
  const Ring& ring = f.ring() ? f.ring() : g.ring();
  return det_fraction_free(sylvester_matrix(f, g, x0, x1, d1, d2), ring);
}

inline ResultantValue sylvester_resultant(const Poly& f, const Poly& g, const System& sys) {
  if (sys.n() != 2) throw UsageError("Sylvester resultant needs exactly two x-variables");
  const auto hf = is_homogeneous(f, sys.xvars);
  const auto hg = is_homogeneous(g, sys.xvars);
  if (!hf.homogeneous || !hg.homogeneous || !hf.degree || !hg.degree || *hf.degree == 0 || *hg.degree == 0)
    throw UsageError("Sylvester resultant needs nonzero x-forms of positive degree");
  return {normalize(sylvester_determinant(f, g, sys.xvars[0], sys.xvars[1], *hf.degree, *hg.degree)),
          ResultantMethod::Sylvester, std::nullopt};
}

// ---------------------------------------------------------------------------
// Macaulay route

/// Degree-D monomials in n variables with their row assignment and the extraneous minor.
struct MacaulayLayout {
  std::size_t critical_degree = 0;
  std::vector<std::vector<Exponent>> monomials;  // shared row and column order
  std::vector<std::size_t> row_form;             // form whose multiple fills the row
  std::vector<bool> reduced;                     // divisible by x_j^d_j for exactly one j
  std::vector<std::size_t> minor;                // indices of non-reduced monomials (rows and columns of M')

  std::size_t size() const noexcept { return monomials.size(); }
};

inline MacaulayLayout macaulay_layout(std::span<const std::size_t> degrees) {
  const std::size_t n = degrees.size();
  if (n == 0) throw UsageError("Macaulay layout of an empty system");
  MacaulayLayout layout;
  std::size_t D = 1;
  for (auto d : degrees) {
    if (d == 0) throw UsageError("Macaulay layout needs positive degrees");
    D += d - 1;
  }
  layout.critical_degree = D;

  std::vector<Exponent> e(n, 0);
  std::function<void(std::size_t, std::size_t)> enumerate = [&](std::size_t var, std::size_t left) {
    if (var + 1 == n) {
      e[var] = static_cast<Exponent>(left);
      layout.monomials.push_back(e);
      return;
    }
    for (std::size_t k = left + 1; k-- > 0;) {
      e[var] = static_cast<Exponent>(k);
      enumerate(var + 1, left - k);
    }
  };
  enumerate(0, D);

  for (std::size_t r = 0; r < layout.monomials.size(); ++r) {
    const auto& m = layout.monomials[r];
    std::size_t hits = 0;
    std::optional<std::size_t> first;
    for (std::size_t i = 0; i < n; ++i) {
      if (m[i] >= degrees[i]) {
        ++hits;
        if (!first) first = i;
      }
    }
    if (!first) throw InternalError("Macaulay: monomial not divisible by any x_i^d_i");
    layout.row_form.push_back(*first);
    layout.reduced.push_back(hits == 1);
    if (hits >= 2) layout.minor.push_back(r);
  }
  return layout;
}

namespace detail {

/// Forms split into (x-exponent, coefficient) pairs, ready for repeated numeric specialization.
class MacaulayEvaluator {
 public:
  MacaulayEvaluator(const Ring& ring, std::span<const std::size_t> xvars, std::span<const Poly> forms,
                    std::span<const std::size_t> degrees)
      : ring_(ring), layout_(macaulay_layout(degrees)), degrees_(degrees.begin(), degrees.end()) {
    for (std::size_t r = 0; r < layout_.size(); ++r) column_.emplace(layout_.monomials[r], r);
    for (const auto& f : forms) {
      std::vector<std::pair<std::vector<Exponent>, Poly>> terms;
      for (auto& [key, coeff] : coefficients_in(f, xvars)) {
        std::vector<Exponent> e;
        for (auto v : xvars) e.push_back(key[v]);
        terms.emplace_back(std::move(e), coeff);
      }
      terms_.push_back(std::move(terms));
    }
  }

  const MacaulayLayout& layout() const noexcept { return layout_; }

  /// det M / det M' at a full numeric assignment of the ring; nullopt when det M' vanishes.
  std::optional<Rational> evaluate(std::span<const Rational> point) const {
    const std::size_t n = degrees_.size();
    std::vector<std::vector<std::pair<std::size_t, Integer>>> scaled(n);
    std::vector<Integer> scale(n, 1);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Rational> values;
      for (const auto& [e, coeff] : terms_[i]) {
        values.push_back(evaluate_at(coeff, point));
        mpz_lcm(scale[i].get_mpz_t(), scale[i].get_mpz_t(), values.back().get_den_mpz_t());
      }
      for (std::size_t t = 0; t < values.size(); ++t) {
        Rational v = values[t] * scale[i];
        scaled[i].emplace_back(t, v.get_num());
      }
    }

    const std::size_t N = layout_.size();
    Matrix<Integer> m(N, N, Integer(0));
    std::vector<Exponent> target(n);
    for (std::size_t r = 0; r < N; ++r) {
      const std::size_t i = layout_.row_form[r];
      const auto& alpha = layout_.monomials[r];
      for (const auto& [t, value] : scaled[i]) {
        const auto& beta = terms_[i][t].first;
        for (std::size_t k = 0; k < n; ++k) target[k] = alpha[k] + beta[k] - (k == i ? degrees_[i] : 0);
        m(r, column_.at(target)) = value;
      }
    }

    const std::size_t K = layout_.minor.size();
    Matrix<Integer> minor(K, K, Integer(0));
    for (std::size_t a = 0; a < K; ++a)
      for (std::size_t b = 0; b < K; ++b) minor(a, b) = m(layout_.minor[a], layout_.minor[b]);
    const Integer det_minor = det_fraction_free(minor);
    if (det_minor == 0) return std::nullopt;
    const Integer det_full = det_fraction_free(m);

    Integer scale_full = 1, scale_minor = 1;
    for (std::size_t r = 0; r < N; ++r) scale_full *= scale[layout_.row_form[r]];
    for (auto r : layout_.minor) scale_minor *= scale[layout_.row_form[r]];
    Rational value(det_full * scale_minor, det_minor * scale_full);
    value.canonicalize();
    return value;
  }

 private:
  Ring ring_;
  MacaulayLayout layout_;
  std::vector<std::size_t> degrees_;
  std::map<std::vector<Exponent>, std::size_t> column_;
  std::vector<std::vector<std::pair<std::vector<Exponent>, Poly>>> terms_;
};

struct SampleStats {
  std::size_t accepted = 0;
  std::size_t rejected = 0;
  bool aborted = false;

  /// More than half of the samples rejected (with a small allowance while the pass warms up).
  bool too_many_rejections() const { return rejected > accepted + 8; }
};

/// Dense Newton interpolation over a tensor grid, one variable at a time.
///
/// Nodes per variable come from the stream 1, 2, 3, ...; a node is skipped when any sample beneath it is
/// rejected. Returns nullopt when the pass has to be abandoned.
class GridInterpolator {
 public:
  using Sampler = std::function<std::optional<Rational>(std::span<const Rational>)>;

  GridInterpolator(Ring ring, std::vector<std::size_t> variables, std::vector<std::size_t> bounds, Sampler sampler)
      : ring_(std::move(ring)), vars_(std::move(variables)), bounds_(std::move(bounds)), sampler_(std::move(sampler)) {
    point_.assign(ring_->size(), Rational(0));
  }

  std::optional<Poly> run() {
    auto p = level(0);
    if (!p || stats_.aborted || 2 * stats_.rejected > stats_.accepted + stats_.rejected) return std::nullopt;
    return p;
  }

  const SampleStats& stats() const noexcept { return stats_; }

 private:
  std::optional<Poly> level(std::size_t j) {
    if (j == vars_.size()) {
      auto value = sampler_(point_);
      if (!value) {
        ++stats_.rejected;
        if (stats_.too_many_rejections()) stats_.aborted = true;
        return std::nullopt;
      }
      ++stats_.accepted;
      return Poly(ring_, *value);
    }
    const std::size_t need = bounds_[j] + 1;
    const std::size_t cap = need + std::max<std::size_t>(8, need);
    std::vector<Rational> nodes;
    std::vector<Poly> values;
    for (std::size_t node = 1; nodes.size() < need; ++node) {
      if (node > cap || stats_.aborted) return std::nullopt;
      point_[vars_[j]] = Rational(static_cast<long>(node));
      auto sub = level(j + 1);
      if (!sub) continue;
      nodes.emplace_back(static_cast<long>(node));
      values.push_back(std::move(*sub));
    }
    point_[vars_[j]] = 0;
    return newton(vars_[j], nodes, std::move(values));
  }

  Poly newton(std::size_t var, const std::vector<Rational>& nodes, std::vector<Poly> c) const {
    const std::size_t k = nodes.size();
    for (std::size_t j = 1; j < k; ++j)
      for (std::size_t i = k - 1; i >= j; --i) {
        c[i] = (c[i] - c[i - 1]) * Rational(1 / (nodes[i] - nodes[i - j]));
        if (i == j) break;
      }
    const Poly x = Poly::variable(ring_, var);
    Poly r = c[k - 1];
    for (std::size_t j = k - 1; j-- > 0;) r = r * (x - Poly(ring_, nodes[j])) + c[j];
    return r;
  }

  Ring ring_;
  std::vector<std::size_t> vars_;
  std::vector<std::size_t> bounds_;
  Sampler sampler_;
  std::vector<Rational> point_;
  SampleStats stats_;
};

/// Random integer matrix with entries in [-5, 5] and determinant +-1.
inline Matrix<Integer> random_unimodular(std::size_t n, std::mt19937_64& rng) {
  for (std::size_t attempt = 0; attempt < 200000; ++attempt) {
    Matrix<Integer> u(n, n, Integer(0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) u(i, j) = static_cast<long>(rng() % 11) - 5;
    const Integer d = det_fraction_free(u);
    if (d == 1 || d == -1) return u;
  }
  // Unit lower times unit upper, entries of each factor in {-1, 0, 1}.
  Matrix<Integer> l(n, n, Integer(0)), up(n, n, Integer(0)), u(n, n, Integer(0));
  for (std::size_t i = 0; i < n; ++i) {
    l(i, i) = up(i, i) = 1;
    for (std::size_t j = 0; j < i; ++j) {
      l(i, j) = static_cast<long>(rng() % 3) - 1;
      up(j, i) = static_cast<long>(rng() % 3) - 1;
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) u(i, j) += l(i, k) * up(k, j);
  return u;
}

inline std::vector<Poly> change_coordinates(std::span<const Poly> forms, std::span<const std::size_t> xvars,
                                            const Matrix<Integer>& u, const Ring& ring) {
  std::vector<Poly> images;
  for (std::size_t j = 0; j < xvars.size(); ++j) {
    Poly l(ring);
    for (std::size_t k = 0; k < xvars.size(); ++k) l += Poly::variable(ring, xvars[k]) * Rational(u(j, k));
    images.push_back(std::move(l));
  }
  std::vector<Poly> out;
  for (const auto& f : forms) out.push_back(substitute(f, xvars, images));
  return out;
}

inline std::size_t checked_degree(const Poly& f, std::span<const std::size_t> xvars) {
  const auto h = is_homogeneous(f, xvars);
  if (!h.homogeneous || !h.degree || *h.degree == 0)
    throw UsageError("resultant needs nonzero forms homogeneous of positive degree in the x-block");
  return *h.degree;
}

}  // namespace detail

/// Degree bound per coefficient variable: sum_i (prod_{j != i} d_j) * deg_v f_i. Variables absent from
/// every form get no entry.
inline std::map<std::size_t, std::size_t> resultant_degree_bounds(std::span<const Poly> forms,
                                                                  std::span<const std::size_t> degrees,
                                                                  std::span<const std::size_t> coefficient_vars) {
  std::map<std::size_t, std::size_t> bounds;
  for (auto v : coefficient_vars) {
    std::size_t b = 0;
    for (std::size_t i = 0; i < forms.size(); ++i) {
      std::size_t weight = 1;
      for (std::size_t j = 0; j < degrees.size(); ++j)
        if (j != i) weight *= degrees[j];
      b += weight * forms[i].degree_in(v).value_or(0);
    }
    if (b > 0) bounds.emplace(v, b);
  }
  return bounds;
}

/// Res = det M / det M' via evaluation and dense interpolation in the coefficient variables.
inline ResultantValue macaulay_resultant(std::span<const Poly> forms, const System& sys,
                                         const ResultantOptions& options = {}) {
  if (forms.size() != sys.n()) throw UsageError("Macaulay resultant needs one form per x-variable");
  std::vector<std::size_t> degrees;
  for (const auto& f : forms) degrees.push_back(detail::checked_degree(f, sys.xvars));

  std::vector<std::size_t> coefficient_vars = sys.yvars;
  coefficient_vars.push_back(sys.epsilon);
  const auto bound_map = resultant_degree_bounds(forms, degrees, coefficient_vars);
  std::vector<std::size_t> vars, bounds;
  for (const auto& [v, b] : bound_map) {
    vars.push_back(v);
    bounds.push_back(b);
  }

  std::mt19937_64 rng(options.seed);
  std::vector<Poly> current(forms.begin(), forms.end());
  std::optional<Matrix<Integer>> change;

  for (std::size_t attempt = 0; attempt <= options.max_coordinate_changes; ++attempt) {
    if (attempt > 0) {
      change = detail::random_unimodular(sys.n(), rng);
      current = detail::change_coordinates(forms, sys.xvars, *change, sys.ring);
    }
    const detail::MacaulayEvaluator evaluator(sys.ring, sys.xvars, current, degrees);

    if (vars.empty()) {
      std::vector<Rational> point(sys.ring->size(), Rational(0));
      if (auto v = evaluator.evaluate(point))
        return {normalize(Poly(sys.ring, *v)), ResultantMethod::MacaulayDirect, change};
      continue;
    }

    detail::GridInterpolator grid(sys.ring, vars, bounds,
                                  [&](std::span<const Rational> p) { return evaluator.evaluate(p); });
    auto result = grid.run();
    if (!result) continue;

    std::size_t verified = 0;
    for (std::size_t tries = 0; verified < options.verification_points && tries < 64; ++tries) {
      std::vector<Rational> point(sys.ring->size(), Rational(0));
      for (auto v : vars) {
        point[v] = Rational(Integer(static_cast<long>(rng() % 2000001) - 1000000),
                            Integer(static_cast<unsigned long>(1 + rng() % 97)));
        point[v].canonicalize();
      }
      auto direct = evaluator.evaluate(point);
      if (!direct) continue;
      if (*direct != evaluate_at(*result, point))
        throw InternalError("Macaulay interpolation disagrees with direct evaluation");
      ++verified;
    }
    if (verified < options.verification_points) throw InternalError("Macaulay: no usable verification points");
    return {normalize(*result), ResultantMethod::MacaulayInterpolated, change};
  }
  throw DegenerateLayoutError("Macaulay extraneous factor vanishes identically after " +
                              std::to_string(options.max_coordinate_changes) + " coordinate changes");
}

/// Exact value of the resultant of forms with constant coefficients (no y, no eps), with the
/// Sylvester sign convention for n = 2. For n >= 3 the value is exact up to sign when a coordinate
/// change was needed.
inline Rational constant_resultant(std::span<const Poly> forms, const System& sys,
                                   const ResultantOptions& options = {}) {
  if (forms.size() != sys.n()) throw UsageError("resultant needs one form per x-variable");
  std::vector<std::size_t> degrees;
  for (const auto& f : forms) {
    degrees.push_back(detail::checked_degree(f, sys.xvars));
    for (auto v : sys.yvars)
      if (f.involves(v)) throw UsageError("constant_resultant: form depends on a parameter");
    if (f.involves(sys.epsilon)) throw UsageError("constant_resultant: form depends on eps");
  }
  if (sys.n() == 2)
    return sylvester_determinant(forms[0], forms[1], sys.xvars[0], sys.xvars[1], degrees[0], degrees[1])
        .constant_term();
  std::mt19937_64 rng(options.seed);
  std::vector<Poly> current(forms.begin(), forms.end());
  const std::vector<Rational> point(sys.ring->size(), Rational(0));
  for (std::size_t attempt = 0; attempt <= options.max_coordinate_changes; ++attempt) {
    if (attempt > 0)
      current = detail::change_coordinates(forms, sys.xvars, detail::random_unimodular(sys.n(), rng), sys.ring);
    const detail::MacaulayEvaluator evaluator(sys.ring, sys.xvars, current, degrees);
    if (auto v = evaluator.evaluate(point)) return *v;
  }
  throw DegenerateLayoutError("Macaulay extraneous factor vanishes for every tried coordinate change");
}

/// Routes n = 2 to Sylvester and everything else to Macaulay. `forms` overrides sys.forms.
inline ResultantValue resultant(const System& sys, std::optional<std::span<const Poly>> forms = std::nullopt,
                                const ResultantOptions& options = {}) {
  std::span<const Poly> fs = forms ? *forms : std::span<const Poly>(sys.forms);
  if (fs.size() != sys.n()) throw UsageError("resultant needs one form per x-variable");
  ResultantRoute route = options.route;
  if (route == ResultantRoute::Automatic) route = sys.n() == 2 ? ResultantRoute::Sylvester : ResultantRoute::Macaulay;

  if (route == ResultantRoute::Sylvester) {
    ResultantValue s = sylvester_resultant(fs[0], fs[1], sys);
    if (options.cross_check) {
      ResultantValue m = macaulay_resultant(fs, sys, options);
      if (!(m.value == s.value)) throw InternalError("Sylvester and Macaulay resultants disagree");
    }
    return s;
  }
  return macaulay_resultant(fs, sys, options);
}

}  // namespace gcpres
