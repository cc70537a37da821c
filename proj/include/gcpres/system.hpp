#pragma once

#include <cstddef>
#include <cstdint>
#include <iomanip>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "gcpres/format.hpp"
#include "gcpres/poly.hpp"

namespace gcpres {

/// Name of the perturbation parameter; always the last variable of a system ring.
inline constexpr std::string_view kEpsilonName = "eps";

/// n forms homogeneous in the x-block, with coefficients in Q[y].
///
/// Ring layout: x_1..x_n, y_1..y_m, eps.
struct System {
  Ring ring;
  std::vector<std::size_t> xvars;
  std::vector<std::size_t> yvars;
  std::size_t epsilon = 0;
  std::vector<std::string> names;
  std::vector<Poly> forms;
  std::vector<std::size_t> degrees;

  std::size_t n() const noexcept { return xvars.size(); }
  std::size_t m() const noexcept { return yvars.size(); }
};

inline Ring system_ring(std::vector<std::string> xnames, const std::vector<std::string>& ynames) {
  for (const auto& y : ynames) xnames.push_back(y);
  xnames.emplace_back(kEpsilonName);
  return make_ring(std::move(xnames));
}

/// Checks the System invariants and assembles it. The first `n_x` ring variables form the x-block.
inline System make_system(const Ring& ring, std::size_t n_x, std::vector<Poly> forms,
                          std::vector<std::string> names = {}) {
  if (ring->size() < n_x + 1 || ring->name(ring->size() - 1) != kEpsilonName)
    throw UsageError("ring must end with the perturbation variable");
  System sys;
  sys.ring = ring;
  for (std::size_t i = 0; i < n_x; ++i) sys.xvars.push_back(i);
  for (std::size_t i = n_x; i + 1 < ring->size(); ++i) sys.yvars.push_back(i);
  sys.epsilon = ring->size() - 1;
  if (names.empty())
    for (std::size_t i = 0; i < forms.size(); ++i) names.push_back("f" + std::to_string(i + 1));

  if (forms.size() != n_x) throw FormCountMismatchError(n_x, forms.size());
  for (std::size_t i = 0; i < forms.size(); ++i) {
    if (!same_ring(forms[i].ring(), ring) && !forms[i].is_zero())
      throw UsageError("form '" + names[i] + "' is over a different ring");
    if (forms[i].involves(sys.epsilon)) throw UsageError("form '" + names[i] + "' mentions the perturbation variable");
    const auto check = is_homogeneous(forms[i], sys.xvars);
    if (!check.homogeneous) {
      const auto& terms = forms[i].terms();
      const Monomial& a = terms.begin()->first;
      for (const auto& [m, c] : terms) {
        if (m.degree_in(sys.xvars) != a.degree_in(sys.xvars))
          throw NonHomogeneousError(names[i], format_monomial(a, *ring), format_monomial(m, *ring));
      }
    }
    if (!check.degree || *check.degree == 0) throw ZeroXDegreeError(names[i]);
    sys.degrees.push_back(*check.degree);
  }
  sys.forms = std::move(forms);
  sys.names = std::move(names);
  return sys;
}

/// Same system with the forms replaced (degrees recomputed and rechecked).
inline System with_forms(const System& sys, std::vector<Poly> forms) {
  return make_system(sys.ring, sys.n(), std::move(forms), sys.names);
}

/// Deterministic text rendering in the input grammar.
inline std::string canonical_text(const System& sys) {
  std::string out = "vars";
  for (auto v : sys.xvars) out += ' ' + sys.ring->name(v);
  out += ";\nparams";
  for (auto v : sys.yvars) out += ' ' + sys.ring->name(v);
  out += ";\n";
  for (std::size_t i = 0; i < sys.forms.size(); ++i) out += sys.names[i] + " = " + format_poly(sys.forms[i]) + ";\n";
  return out;
}

/// FNV-1a 64 of canonical_text, as 16 hex digits.
inline std::string system_hash(const System& sys) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char ch : canonical_text(sys)) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

}  // namespace gcpres
