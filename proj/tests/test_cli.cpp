#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gcpres/cli.hpp"
#include "support.hpp"

using namespace gcpres;
using namespace gcpres::cli;
using gcpres::testing::fixture_path;

namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome invoke(CommandSpec spec) {
  std::ostringstream out, err;
  const int status = run(spec, out, err);
  return {status, out.str(), err.str()};
}

CommandSpec command(Subcommand c, const std::string& file) {
  CommandSpec s;
  s.command = c;
  s.input = fixture_path(file);
  return s;
}

std::string temp_system(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("gcpres_test_" + name + ".sys");
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST(Cli, PresEmbedded) {
  EXPECT_EQ(invoke(command(Subcommand::Pres, "embedded.sys")).out, "y^2\n");
  CommandSpec f = command(Subcommand::Pres, "embedded.sys");
  f.factored = true;
  EXPECT_EQ(invoke(f).out, "(y)^2\n");
}

TEST(Cli, GcpWithUserPerturbation) {
  CommandSpec s = command(Subcommand::Gcp, "intro.sys");
  s.perturbation = "x1^2; x2^2";
  const Outcome o = invoke(s);
  EXPECT_EQ(o.status, kExitOk);
  EXPECT_EQ(o.out, "s = 1\n3*y^4 + 6*y^3 - 2*y^2 - 5*y - 2\n");
}

TEST(Cli, GcpSeededFallsBackToRandomPerturbation) {
  const Outcome o = invoke(command(Subcommand::Gcp, "intro.sys"));
  EXPECT_EQ(o.status, kExitOk);
  EXPECT_EQ(o.out.rfind("s = ", 0), 0u);
}

TEST(Cli, PlanarCompare) {
  CommandSpec s = command(Subcommand::Planar, "intro.sys");
  s.compare = true;
  EXPECT_EQ(invoke(s).out, "zero sets agree: y + 2\n");
  EXPECT_EQ(invoke(command(Subcommand::Planar, "embedded.sys")).out, "y\n");
}

TEST(Cli, ResAndCheck) {
  EXPECT_EQ(invoke(command(Subcommand::Res, "excess_linear.sys")).out, "y^3 - 3*y + 2\n");
  CommandSpec f = command(Subcommand::Res, "excess_linear.sys");
  f.factored = true;
  EXPECT_EQ(invoke(f).out, "(y - 1)^2*(y + 2)\n");
  EXPECT_EQ(invoke(command(Subcommand::Res, "intro.sys")).out, "0\n");
  EXPECT_EQ(invoke(command(Subcommand::Check, "twisted.sys")).out, "ok: n=3, m=1, degrees (2, 2, 2)\n");
}

TEST(Cli, JsonDocument) {
  CommandSpec s = command(Subcommand::Pres, "excess_linear.sys");
  s.json = true;
  const Outcome o = invoke(s);
  ASSERT_EQ(o.status, kExitOk);
  const auto doc = nlohmann::json::parse(o.out);
  std::vector<std::string> keys;
  for (const auto& [k, v] : doc.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"agreement", "command", "result_poly", "squarefree_factors", "system_hash",
                                            "trials", "valuation_s"}));
  EXPECT_EQ(doc["command"], "pres");
  EXPECT_EQ(doc["result_poly"], "y^3 - 3*y + 2");
  EXPECT_EQ(doc["squarefree_factors"], nlohmann::json::parse(R"([["y - 1", 2], ["y + 2", 1]])"));
  EXPECT_EQ(doc["trials"], 2);
  EXPECT_EQ(doc["agreement"], true);
  EXPECT_TRUE(doc["valuation_s"].is_null());
}

TEST(Cli, JsonPolynomialsReparse) {
  for (const char* name : {"intro.sys", "excess_linear.sys", "twisted.sys"}) {
    CommandSpec s = command(Subcommand::Gcp, name);
    s.json = true;
    const auto doc = nlohmann::json::parse(invoke(s).out);
    std::ifstream in(fixture_path(name));
    std::ostringstream text;
    text << in.rdbuf();
    const System sys = parse_and_validate(text.str());
    const Poly back = parse_poly(doc["result_poly"].get<std::string>(), sys.ring);
    EXPECT_EQ(normalize(back).poly(), back) << name;
    EXPECT_EQ(format_poly(back), doc["result_poly"].get<std::string>());
    EXPECT_TRUE(doc["valuation_s"].is_number_unsigned());
    EXPECT_EQ(doc["system_hash"], system_hash(sys));
  }
}

TEST(Cli, ValidationFailuresExitOne) {
  CommandSpec missing;
  missing.command = Subcommand::Check;
  missing.input = "/nonexistent/none.sys";
  EXPECT_EQ(invoke(missing).status, kExitValidation);

  CommandSpec inhomog;
  inhomog.command = Subcommand::Pres;
  inhomog.input = temp_system("inhomog", "vars x1 x2; params y; f1 = x1^2 + x2; f2 = x1;");
  const Outcome o = invoke(inhomog);
  EXPECT_EQ(o.status, kExitValidation);
  EXPECT_NE(o.err.find("not homogeneous"), std::string::npos);
  EXPECT_TRUE(o.out.empty());

  CommandSpec syntax;
  syntax.command = Subcommand::Check;
  syntax.input = temp_system("syntax", "vars x1 x2;\nf1 = x1 + ;\nf2 = x2;");
  const Outcome so = invoke(syntax);
  EXPECT_EQ(so.status, kExitValidation);
  EXPECT_NE(so.err.find("line 2, column 11"), std::string::npos) << so.err;
}

TEST(Cli, BadFlagsExitOne) {
  CommandSpec wrong = command(Subcommand::Pres, "intro.sys");
  wrong.perturbation = "x1^2; x2^2";
  EXPECT_EQ(invoke(wrong).status, kExitValidation);
  CommandSpec compare = command(Subcommand::Gcp, "intro.sys");
  compare.compare = true;
  EXPECT_EQ(invoke(compare).status, kExitValidation);
  CommandSpec trials = command(Subcommand::Pres, "intro.sys");
  trials.trials = 1;
  EXPECT_EQ(invoke(trials).status, kExitValidation);
  CommandSpec inadmissible = command(Subcommand::Gcp, "intro.sys");
  inadmissible.perturbation = "x1^2; x1*x2";
  EXPECT_EQ(invoke(inadmissible).status, kExitValidation);
  CommandSpec garbage = command(Subcommand::Gcp, "intro.sys");
  garbage.perturbation = "x1^2; x3";
  EXPECT_EQ(invoke(garbage).status, kExitValidation);
}

TEST(Cli, EntropySeedStillAnswers) {
  CommandSpec s = command(Subcommand::Pres, "excess_planar.sys");
  s.seed = 0;
  EXPECT_EQ(invoke(s).out, "y\n");
}
