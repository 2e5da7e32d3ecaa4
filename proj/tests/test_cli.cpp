#include <gtest/gtest.h>

#include <sstream>

#include "hyparr_cli/cli.hpp"
#include "support.hpp"

using hyparr::test::fixture;
namespace cli = hyparr::cli;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "hyparr");
  std::vector<const char*> argv;
  for (const auto& s : args) argv.push_back(s.c_str());
  std::ostringstream out, err;
  const int code = cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

nlohmann::ordered_json json_of(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  const Outcome o = invoke(args);
  EXPECT_EQ(o.code, 0) << o.err;
  return nlohmann::ordered_json::parse(o.out);
}

}  // namespace

TEST(Cli, KernelOfA5) {
  const auto j = json_of({"kernel", fixture("FIX-A5")});
  EXPECT_EQ(j["payload"]["dimension"], 2);
  EXPECT_EQ(j["payload"]["basis"].size(), 2u);
}

TEST(Cli, BoundedRegionsOfB5) {
  const auto j = json_of({"regions", fixture("FIX-B5"), "--bounded"});
  EXPECT_EQ(j["payload"]["bounded_count"], 0);
  EXPECT_TRUE(j["payload"]["regions"].empty());
}

TEST(Cli, CharpolyText) {
  const Outcome o = invoke({"charpoly", fixture("FIX-GEN3")});
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("chi(t) = t^2 - 3*t + 3"), std::string::npos) << o.out;
  const Outcome a5 = invoke({"charpoly", fixture("FIX-A5")});
  EXPECT_NE(a5.out.find("chi(t) = t^2 - 5*t + 6"), std::string::npos) << a5.out;
}

TEST(Cli, EveryVerbRunsOnA5) {
  for (const std::string& verb : cli::verbs()) {
    std::vector<std::string> args{verb, fixture("FIX-A5")};
    if (verb == "canonical") args.push_back("--all");
    const Outcome o = invoke(args);
    EXPECT_EQ(o.code, 0) << verb << "\n" << o.err;
    EXPECT_FALSE(o.out.empty()) << verb;
  }
}

TEST(Cli, OutputIsDeterministic) {
  for (const char* verb : {"poset", "regions", "residues", "strata"}) {
    const Outcome a = invoke({verb, fixture("FIX-B5"), "--format", "json"});
    const Outcome b = invoke({verb, fixture("FIX-B5"), "--format", "json"});
    EXPECT_EQ(a.out, b.out) << verb;
  }
}

TEST(Cli, CanonicalByRegion) {
  const auto j = json_of({"canonical", fixture("FIX-COSMO"), "--region", "++-"});
  ASSERT_EQ(j["payload"]["forms"].size(), 1u);
  const std::string rf = j["payload"]["forms"][0]["rational_form"];
  EXPECT_NE(rf.find("10"), std::string::npos) << rf;
}

TEST(Cli, VerifyAndFuzz) {
  EXPECT_EQ(invoke({"verify", fixture("FIX-GEN3")}).code, 0);
  const auto j = json_of({"verify", fixture("FIX-BOOL2"), "--fuzz", "5", "--seed", "9"});
  EXPECT_EQ(j["payload"]["fuzz"]["passed"], 5);
  EXPECT_EQ(invoke({"verify", fixture("FIX-BOOL2"), "--fuzz", "5"}).code, cli::kInputError);
}

TEST(Cli, InjectedFaultFailsVerification) {
  cli::Command cmd;
  cmd.verb = "verify";
  cmd.input = fixture("FIX-A5");
  cmd.inject_fault = true;
  const cli::Report rep = cli::run(cmd);
  EXPECT_EQ(rep.exit_code, cli::kVerificationFailed);
  EXPECT_NE(cli::emit(rep, "text").find("boundary_squared_zero"), std::string::npos);
}

TEST(Cli, InputErrors) {
  const std::vector<std::pair<std::vector<std::string>, std::string>> cases{
      {{"info", fixture("bad-duplicate")}, "DuplicateHyperplane"},
      {{"kernel", fixture("nonessential")}, "ExpectedEssential"},
      {{"info", fixture("bad-rational")}, "MalformedRational"},
      {{"info", fixture("bad-syntax")}, "MalformedInput"},
      {{"info", fixture("missing-file")}, "MalformedInput"},
      {{"canonical", fixture("FIX-A5"), "--region", "+++++"}, "UnboundedRegion"},
  };
  for (const auto& [args, kind] : cases) {
    const Outcome o = invoke(args);
    EXPECT_EQ(o.code, cli::kInputError) << args[1];
    EXPECT_NE(o.err.find(kind), std::string::npos) << o.err;
  }
  EXPECT_EQ(invoke({"frobnicate", fixture("FIX-A5")}).code, cli::kInputError);
  EXPECT_EQ(invoke({"info"}).code, cli::kInputError);
}
