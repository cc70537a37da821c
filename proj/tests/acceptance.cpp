// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any criterion fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "gcpres/cli.hpp"
#include "support.hpp"

using namespace gcpres;
using gcpres::testing::fixture_path;
using gcpres::testing::P;
using gcpres::testing::Random;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

struct Criterion {
  std::string id;
  std::string title;
  double limit_seconds;
  std::function<Verdict()> body;
};

System fixture(const std::string& name) {
  std::ifstream in(fixture_path(name));
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_and_validate(ss.str());
}

Matrix<Integer> matrix2(long a, long b, long c, long d) {
  Matrix<Integer> m(2, 2, Integer(0));
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Dense univariate arithmetic over Q used as an oracle independent of the library's GCD.
using Dense = std::vector<Rational>;  // index = exponent

void trim(Dense& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Dense dense_rem(Dense a, const Dense& b) {
  trim(a);
  while (a.size() >= b.size()) {
    const Rational q = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
    trim(a);
  }
  return a;
}

std::size_t dense_gcd_degree(Dense a, Dense b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Dense r = dense_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.empty() ? 0 : a.size() - 1;
}

/// Do the binary forms f1(x1, x2), f2(x1, x2) (y already substituted) share a root in P^1?
bool common_projective_root(const Poly& f1, const Poly& f2, const System& sys, const std::size_t d[2]) {
  if (f1.is_zero() || f2.is_zero()) return true;
  Dense a(d[0] + 1), b(d[1] + 1);  // coefficient of x1^k x2^(d-k)
  for (const auto& [m, c] : f1.terms()) a[m[sys.xvars[0]]] += c;
  for (const auto& [m, c] : f2.terms()) b[m[sys.xvars[0]]] += c;
  if (a[d[0]] == 0 && b[d[1]] == 0) return true;  // both vanish at [1:0]
  return dense_gcd_degree(a, b) > 0;
}

Poly specialize(const Poly& f, const System& sys, const Rational& y) {
  return evaluate(f, std::map<std::size_t, Rational>{{sys.yvars[0], y}});
}

Verdict ac1() {
  Verdict v;
  const System sys = fixture("intro.sys");
  auto t0 = std::chrono::steady_clock::now();
  const GcpResult a = gcp(sys, perturbation_from_linear_forms(sys, matrix2(1, 0, 0, 1)));
  const double ta = seconds_since(t0);
  t0 = std::chrono::steady_clock::now();
  const GcpResult b = gcp(sys, perturbation_from_linear_forms(sys, matrix2(1, 1, 1, -1)));
  const double tb = seconds_since(t0);
  v.require(a.valuation == 1, "first perturbation: s != 1");
  v.require(a.polynomial == normalize(P(sys.ring, "-3*y^4 - 6*y^3 + 2*y^2 + 5*y + 2")),
            "first perturbation: got " + format_poly(a.polynomial));
  v.require(b.valuation == 1, "second perturbation: s != 1");
  v.require(b.polynomial == normalize(P(sys.ring, "-y^4 - 11*y^3 - 21*y^2 - 5*y + 2")),
            "second perturbation: got " + format_poly(b.polynomial));
  const NormalizedPoly g = gcd_poly(a.polynomial.poly(), b.polynomial.poly());
  v.require(g.poly() == P(sys.ring, "y + 2"), "gcd: got " + format_poly(g));
  v.require(ta < 2.0 && tb < 2.0, "runtime above 2 s");
  return v;
}

Verdict ac2() {
  Verdict v;
  struct Golden {
    const char* file;
    const char* expected;
    bool factored;
  };
  const Golden goldens[] = {{"embedded.sys", "y^2", false}, {"excess_planar.sys", "y", false},
                            {"excess_linear.sys", "(y - 1)^2*(y + 2)", true}, {"twisted.sys", "y", false},
                            {"cusp.sys", "1", false},      {"self_intersection.sys", "1", false}};
  for (const auto& g : goldens) {
    const System sys = fixture(g.file);
    const PresResult r = pres(sys);
    const NormalizedPoly expected = normalize(P(sys.ring, g.expected));
    bool ok;
    if (g.factored) {
      ok = r.factors == squarefree_decomposition(expected.poly());
    } else {
      ok = r.gcd == expected;
    }
    v.require(ok, std::string(g.file) + ": expected " + g.expected + ", got " + format_poly(r.gcd));
  }
  return v;
}

Verdict ac3() {
  Verdict v;
  for (const char* name : {"intro.sys", "embedded.sys", "excess_planar.sys", "cusp.sys"}) {
    const System sys = fixture(name);
    const bool ok = zero_set_equal(pres(sys).gcd.poly(), planar_oracle(sys).zero_set.poly());
    v.require(ok, std::string(name) + " disagrees");
  }
  Random rnd(2024);
  const System shell = gcpres::testing::planar_shell();
  std::size_t count = 0;
  for (int i = 0; i < 30; ++i) {
    const std::size_t dg = static_cast<std::size_t>(rnd.integer(0, 1));
    const std::size_t gy = static_cast<std::size_t>(rnd.integer(dg == 0 ? 1 : 0, 2));
    const Poly g = rnd.binary_form(shell, dg, gy, 3);
    std::vector<Poly> forms;
    for (int k = 0; k < 2; ++k) {
      const std::size_t dh = static_cast<std::size_t>(rnd.integer(1, static_cast<long>(3 - dg)));
      const std::size_t hy = static_cast<std::size_t>(rnd.integer(0, static_cast<long>(3 - gy)));
      forms.push_back(g * rnd.binary_form(shell, dh, hy, 3));
    }
    const System sys = with_forms(shell, forms);
    const NormalizedPoly p = pres(sys).gcd;
    const NormalizedPoly oracle = planar_oracle(sys).zero_set;
    v.require(zero_set_equal(p.poly(), oracle.poly()),
              "random system " + std::to_string(i) + ": pres " + format_poly(p) + ", oracle " + format_poly(oracle));
    ++count;
  }
  v.require(count >= 25, "fewer than 25 random systems");
  return v;
}

Verdict ac4() {
  Verdict v;
  Random rnd(4242);
  const System shell = gcpres::testing::planar_shell();
  ResultantOptions mac;
  mac.route = ResultantRoute::Macaulay;
  for (int i = 0; i < 60; ++i) {
    const std::vector<Poly> forms{rnd.binary_form(shell, static_cast<std::size_t>(rnd.integer(1, 3)), 2, 6),
                                  rnd.binary_form(shell, static_cast<std::size_t>(rnd.integer(1, 3)), 2, 6)};
    const System sys = with_forms(shell, forms);
    const ResultantValue s = resultant(sys);
    const ResultantValue m = resultant(sys, std::nullopt, mac);
    v.require(s.method == ResultantMethod::Sylvester, "default route is not Sylvester");
    v.require(s.value == m.value, "system " + std::to_string(i) + ": " + format_poly(s.value) + " vs " +
                                      format_poly(m.value));
  }
  return v;
}

Verdict ac5() {
  Verdict v;
  Random rnd(5555);
  const System shell = gcpres::testing::planar_shell();
  std::size_t vanishing = 0, checked = 0;
  for (int i = 0; i < 60; ++i) {
    const std::size_t d[2] = {static_cast<std::size_t>(rnd.integer(1, 3)), static_cast<std::size_t>(rnd.integer(1, 3))};
    std::vector<Poly> forms;
    std::vector<Rational> points;
    const Poly y = Poly::variable(shell.ring, shell.yvars[0]);
    const int kind = i % 3;
    if (kind == 0) {
      for (int k = 0; k < 2; ++k) forms.push_back(rnd.binary_form(shell, d[k], 2, 4));
    } else if (kind == 1) {
      // Both forms vanish on x1 = t*x2 when y = y0.
      const Rational y0 = rnd.rational(4, 3), t = rnd.rational(4, 2);
      const Poly l = Poly::variable(shell.ring, shell.xvars[0]) - Poly::variable(shell.ring, shell.xvars[1]) * t;
      for (int k = 0; k < 2; ++k) {
        Poly f = l * (d[k] > 1 ? rnd.binary_form(shell, d[k] - 1, 1, 4) : Poly(shell.ring, 1)) +
                 (y - Poly(shell.ring, y0)) * rnd.binary_form(shell, d[k], 1, 4);
        forms.push_back(f);
      }
      points.push_back(y0);
    } else {
      // The x1^d coefficients share the root y1, giving the common root [1:0].
      const Rational y1 = rnd.rational(4, 2);
      for (int k = 0; k < 2; ++k) {
        Poly f = rnd.binary_form(shell, d[k], 2, 4);
        Poly lead(shell.ring);
        for (const auto& [m, c] : f.terms())
          if (m[shell.xvars[0]] == d[k]) lead.add_term(m, c);
        f -= lead;
        f += Poly::variable(shell.ring, shell.xvars[0]).pow(d[k]) * (y - Poly(shell.ring, y1)) *
             rnd.univariate(shell.ring, shell.yvars[0], 1, 3);
        forms.push_back(f);
      }
      points.push_back(y1);
    }
    bool degenerate = false;
    for (std::size_t k = 0; k < 2; ++k)
      degenerate |= forms[k].is_zero() || !is_homogeneous(forms[k], shell.xvars).homogeneous ||
                    forms[k].degree_in(shell.xvars) != Degree(d[k]);
    if (degenerate) continue;
    const System sys = with_forms(shell, forms);
    const ResultantValue r = resultant(sys);
    while (points.size() < 20) points.push_back(rnd.rational(6, 4));
    for (const auto& y0 : points) {
      const std::vector<Rational> at{0, 0, y0, 0};
      const bool res_zero = r.value.is_zero() || evaluate_at(r.value.poly(), at) == 0;
      const bool root = common_projective_root(specialize(sys.forms[0], sys, y0), specialize(sys.forms[1], sys, y0), sys, d);
      vanishing += res_zero;
      ++checked;
      v.require(res_zero == root, "system " + std::to_string(i) + " at y = " + format_rational(y0) + ": resultant " +
                                      (res_zero ? "vanishes" : "nonzero") + ", oracle " + (root ? "root" : "no root"));
    }
  }
  v.require(checked >= 1000, "fewer than 50 x 20 checks (" + std::to_string(checked) + ")");
  v.require(vanishing >= 20, "too few vanishing specializations exercised");
  return v;
}

Verdict ac6() {
  Verdict v;
  const System sys = fixture("intro.sys");
  const std::vector<Rational> at{0, 0, Rational(-2), 0};
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const GcpResult r = gcp(sys, random_admissible_perturbation(sys, seed));
    v.require(evaluate_at(r.polynomial.poly(), at) == 0, "seed " + std::to_string(seed) + ": CRes(-2) != 0");
  }
  return v;
}

Verdict ac7() {
  Verdict v;
  const System twisted = fixture("twisted.sys");
  const NormalizedPoly g = pres(twisted).gcd;
  const NormalizedPoly sf = squarefree_part(g.poly());
  v.require(sf.is_one() || sf.poly() == P(twisted.ring, "y"), "twisted: zero set of " + format_poly(g) + " not in {0}");
  for (const char* name : {"cusp.sys", "self_intersection.sys"}) {
    const NormalizedPoly h = pres(fixture(name)).gcd;
    v.require(h.is_one(), std::string(name) + ": zero set of " + format_poly(h) + " not empty");
  }
  return v;
}

Verdict ac8() {
  Verdict v;
  for (const char* name : {"intro.sys", "embedded.sys", "excess_planar.sys", "excess_linear.sys", "twisted.sys",
                           "cusp.sys", "self_intersection.sys"}) {
    std::string outputs[2];
    for (auto& o : outputs) {
      cli::CommandSpec spec;
      spec.command = cli::Subcommand::Pres;
      spec.input = fixture_path(name);
      spec.json = true;
      std::ostringstream out, err;
      v.require(cli::run(spec, out, err) == cli::kExitOk, std::string(name) + ": nonzero exit");
      o = out.str();
    }
    v.require(outputs[0] == outputs[1] && !outputs[0].empty(), std::string(name) + ": outputs differ");
  }
  return v;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1", "intro example: two generalized characteristic polynomials and their gcd", 4.0, ac1},
      {"AC2", "golden perturbed resultants of the six singular and excess examples", 60.0, ac2},
      {"AC3", "planar oracle and perturbed resultant have equal zero sets", 120.0, ac3},
      {"AC4", "Sylvester and interpolated Macaulay resultants agree", 180.0, ac4},
      {"AC5", "resultant vanishes at a specialization iff the forms share a projective root", 300.0, ac5},
      {"AC6", "every CRes of the intro system vanishes at y = -2 (20 seeds)", 60.0, ac6},
      {"AC7", "persistent zeros only at the singular fibre; none for non-persistent singularities", 60.0, ac7},
      {"AC8", "pres structured output is byte-identical across runs", 120.0, ac8},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.body();
    } catch (const std::exception& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    const double t = seconds_since(t0);
    v.require(t < c.limit_seconds, "runtime limit exceeded");
    std::printf("%s %s  %s (%.2f s)%s%s\n", c.id.c_str(), v.pass ? "PASS" : "FAIL", c.title.c_str(), t,
                v.detail.empty() ? "" : "\n    ", v.detail.c_str());
    std::fflush(stdout);
    failures += !v.pass;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
