#pragma once

#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gcpres/gcpres.hpp"

namespace gcpres::cli {

enum class Subcommand { Res, Gcp, Pres, Planar, Check };

inline std::string_view to_string(Subcommand c) {
  switch (c) {
    case Subcommand::Res: return "res";
    case Subcommand::Gcp: return "gcp";
    case Subcommand::Pres: return "pres";
    case Subcommand::Planar: return "planar";
    case Subcommand::Check: return "check";
  }
  return "unknown";
}

struct CommandSpec {
  Subcommand command = Subcommand::Check;
  std::string input;
  std::uint64_t seed = kDefaultSeed;  // 0 requests an entropy seed
  std::size_t trials = 2;
  long coefficient_bound = kDefaultCoefficientBound;
  std::optional<std::string> perturbation;
  bool json = false;
  bool factored = false;
  bool compare = false;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitInternal = 2;

/// Flat result document; absent fields are null.
struct Report {
  std::optional<NormalizedPoly> result;
  std::optional<std::size_t> valuation;
  std::optional<std::size_t> trials;
  std::optional<bool> agreement;
};

namespace detail {

inline std::string render(const NormalizedPoly& p, bool factored) {
  if (factored && !p.is_zero() && p.poly().support().size() <= 1) return format_factored(univariate_factors(p));
  return format_poly(p);
}

inline nlohmann::json to_json(const CommandSpec& spec, const System& sys, const Report& r) {
  nlohmann::json doc;
  doc["command"] = std::string(to_string(spec.command));
  doc["system_hash"] = system_hash(sys);
  doc["result_poly"] = r.result ? nlohmann::json(format_poly(*r.result)) : nlohmann::json(nullptr);
  nlohmann::json factors = nlohmann::json::array();
  if (r.result)
    for (const auto& f : univariate_factors(*r.result))
      factors.push_back({format_poly(f.factor), f.multiplicity});
  doc["squarefree_factors"] = std::move(factors);
  doc["valuation_s"] = r.valuation ? nlohmann::json(*r.valuation) : nlohmann::json(nullptr);
  doc["trials"] = r.trials ? nlohmann::json(*r.trials) : nlohmann::json(nullptr);
  doc["agreement"] = r.agreement ? nlohmann::json(*r.agreement) : nlohmann::json(nullptr);
  return doc;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void check_flags(const CommandSpec& spec) {
  if (spec.perturbation && spec.command != Subcommand::Gcp) throw UsageError("--perturbation applies to gcp only");
  if (spec.compare && spec.command != Subcommand::Planar) throw UsageError("--compare applies to planar only");
  if (spec.trials < 2) throw UsageError("--trials must be at least 2");
  if (spec.coefficient_bound < 1) throw UsageError("--coeff-bound must be at least 1");
}

}  // namespace detail

/// Executes one command. Results go to `out`, diagnostics to `err`; returns the process exit status.
inline int run(const CommandSpec& spec, std::ostream& out, std::ostream& err) {
  std::optional<System> sys;
  try {
    detail::check_flags(spec);
    sys = parse_and_validate(detail::read_file(spec.input));
  } catch (const ParseError& e) {
    err << spec.input << ": " << e.what() << '\n';
    return kExitValidation;
  } catch (const ValidationError& e) {
    err << spec.input << ": " << e.what() << '\n';
    return kExitValidation;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }

  const std::uint64_t seed = spec.seed != 0 ? spec.seed : (std::uint64_t{std::random_device{}()} << 32) ^ std::random_device{}();
  Report report;
  std::string text;
  int status = kExitOk;
  try {
    switch (spec.command) {
      case Subcommand::Check: {
        text = "ok: n=" + std::to_string(sys->n()) + ", m=" + std::to_string(sys->m()) + ", degrees (";
        for (std::size_t i = 0; i < sys->degrees.size(); ++i)
          text += (i ? ", " : "") + std::to_string(sys->degrees[i]);
        text += ")";
        break;
      }
      case Subcommand::Res: {
        report.result = resultant(*sys).value;
        text = detail::render(*report.result, spec.factored);
        break;
      }
      case Subcommand::Gcp: {
        PerturbationVector p = spec.perturbation ? user_perturbation(*sys, parse_poly_list(*spec.perturbation, sys->ring))
                                                 : random_admissible_perturbation(*sys, seed, spec.coefficient_bound);
        GcpResult g = gcp(*sys, p);
        report.result = g.polynomial;
        report.valuation = g.valuation;
        text = "s = " + std::to_string(g.valuation) + "\n" + detail::render(g.polynomial, spec.factored);
        break;
      }
      case Subcommand::Pres: {
        PresResult r = pres(*sys, {spec.trials, seed, spec.coefficient_bound, {}});
        report.result = r.gcd;
        report.trials = r.trials;
        report.agreement = r.agreement;
        text = detail::render(r.gcd, spec.factored);
        if (!r.agreement) err << "warning: the confirmation trial changed the GCD\n";
        break;
      }
      case Subcommand::Planar: {
        PlanarZeroSet z = planar_oracle(*sys);
        report.result = z.zero_set;
        text = detail::render(z.zero_set, spec.factored);
        if (spec.compare) {
          PresResult r = pres(*sys, {spec.trials, seed, spec.coefficient_bound, {}});
          const bool agree = zero_set_equal(z.zero_set.poly(), r.gcd.poly());
          report.trials = r.trials;
          report.agreement = agree;
          text = agree ? "zero sets agree: " + text
                       : "zero sets differ: oracle " + text + ", pres " + detail::render(r.gcd, spec.factored);
          if (!agree) status = kExitInternal;
        }
        break;
      }
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const ParseError& e) {
    err << "error: --perturbation: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }

  if (spec.json) {
    out << detail::to_json(spec, *sys, report).dump() << '\n';
  } else {
    out << text << '\n';
  }
  return status;
}

}  // namespace gcpres::cli
