#include <qcontig/cli.hpp>
#include <qcontig/report.hpp>

#include <gtest/gtest.h>

#include <array>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace qcontig;
namespace fs = std::filesystem;

namespace {

struct CliRun {
  int code;
  std::string out, err;
};

CliRun invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch_dir(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("qcontig-test-" + name + "-" +
                                                  std::to_string(::testing::UnitTest::GetInstance()->random_seed()));
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

int shell_exit(const std::string& cmd) {
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST(ParseComplex, Forms) {
  EXPECT_EQ(parse_complex("0.5"), cplx(0.5, 0));
  EXPECT_EQ(parse_complex("0.5+0.25i"), cplx(0.5, 0.25));
  EXPECT_EQ(parse_complex("-1e-3-2i"), cplx(-1e-3, -2));
  EXPECT_EQ(parse_complex("+i"), cplx(0, 1));
  EXPECT_EQ(parse_complex("-.5i"), cplx(0, -0.5));
  EXPECT_THROW(parse_complex("abc"), DomainViolation);
  EXPECT_THROW(parse_complex(""), DomainViolation);
  EXPECT_THROW(parse_complex("1+2"), DomainViolation);
}

TEST(Eval, ZeroArgumentGivesOne) {
  const CliRun r = invoke({"--format", "json", "eval", "--kind", "3phi2", "--num", "0.3,0.4,0.5", "--den",
                     "0.6,0.7", "--q", "0.5", "--z", "0"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["value"][0].get<double>(), 1.0);
  EXPECT_EQ(j["value"][1].get<double>(), 0.0);
  EXPECT_TRUE(j["converged"].get<bool>());
}

TEST(Eval, QGauss) {
  const CliRun r = invoke({"--format", "json", "eval", "--kind", "2phi1", "--num", "0.5,0.8", "--den", "0.2",
                     "--q", "0.3", "--z", "0.5"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  // (c/a, c/b; q)_inf / (c, c/ab; q)_inf with a = 0.5, b = 0.8, c = 0.2
  const PrecisionPolicy p = PrecisionPolicy::standard();
  const std::array<cplx, 2> num{0.4, 0.25}, den{0.2, 0.5};
  const cplx oracle = qpoch_ratio_infinite<cplx>(num, den, 0.3, p);
  const cplx v(json::parse(r.out)["value"][0].get<double>(), json::parse(r.out)["value"][1].get<double>());
  EXPECT_LT(std::abs(v - oracle) / std::abs(oracle), 5e-12);
}

TEST(Eval, TextOutput) {
  const CliRun r = invoke({"eval", "--kind", "1phi0", "--num", "0", "--q", "0.5", "--z", "0.25"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("value"), std::string::npos);
  EXPECT_NE(r.out.find("terms_used"), std::string::npos);
  EXPECT_NE(r.out.find("tail_bound"), std::string::npos);
}

TEST(Eval, ExtendedPrecision) {
  const CliRun r = invoke({"--precision", "extended", "--digits", "50", "--format", "json", "eval", "--kind",
                     "1phi0", "--num", "0", "--q", "0.5", "--z", "0.25"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  // 1phi0(0;-;q,z) = 1/(z;q)_inf
  const std::string text = json::parse(r.out)["value_text"].get<std::string>();
  EXPECT_GE(text.size(), 40u) << text;
}

TEST(Eval, BaseOutsideUnitDiskIsUsageError) {
  const CliRun r = invoke({"eval", "--kind", "2phi1", "--num", "0.5,0.8", "--den", "0.2", "--q", "1.5", "--z", "0.5"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("--q"), std::string::npos) << r.err;
}

TEST(Eval, ParseErrorsNameTheFlag) {
  CliRun r = invoke({"eval", "--kind", "2phi1", "--num", "0.5,x", "--den", "0.2", "--q", "0.5", "--z", "0.5"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("--num"), std::string::npos) << r.err;
  r = invoke({"eval", "--kind", "2phi1", "--num", "0.5", "--den", "0.2", "--q", "0.5", "--z", "0.5"});
  EXPECT_EQ(r.code, kExitUsage);
  r = invoke({"eval", "--kind", "7xy", "--num", "0.5", "--q", "0.5", "--z", "0.5"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("--kind"), std::string::npos) << r.err;
  r = invoke({"eval", "--kind", "2phi1", "--num", "0.5,0.8", "--den", "0.2", "--q", "0.5", "--z", "2"});
  EXPECT_EQ(r.code, kExitUsage);
}

TEST(Eval, NotConvergedExitsThree) {
  const CliRun r = invoke({"--max-terms", "100", "eval", "--kind", "1phi0", "--num", "0", "--q", "0.5", "--z", "0.9"});
  EXPECT_EQ(r.code, kExitNotConverged);
}

TEST(Cli, NoSubcommandIsUsageError) {
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(invoke({"--precision", "huge", "list"}).code, kExitUsage);
}

TEST(List, PatternFamily) {
  const CliRun r = invoke({"list", "--family", "pattern", "--json"});
  ASSERT_EQ(r.code, kExitOk);
  const json j = json::parse(r.out);
  ASSERT_EQ(j.size(), 8u);
  for (const auto& e : j) {
    EXPECT_EQ(e["family"], "pattern");
    for (const char* key : {"id", "free_params", "constraints", "paper_anchor", "notes"})
      EXPECT_TRUE(e.contains(key)) << key;
  }
}

TEST(List, UnknownFamilyIsEmpty) {
  const CliRun r = invoke({"list", "--family", "nonexistent", "--json"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(json::parse(r.out).empty());
}

TEST(List, JsonRoundTripsTheRegistry) {
  const CliRun r = invoke({"list", "--json"});
  ASSERT_EQ(r.code, kExitOk);
  std::vector<std::string> ids;
  for (const auto& e : json::parse(r.out)) ids.push_back(e["id"].get<std::string>());
  EXPECT_GE(ids.size(), 100u);
  EXPECT_EQ(ids, relation_ids());
}

TEST(List, TextListingOneLinePerRelation) {
  const CliRun r = invoke({"list"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(static_cast<std::size_t>(std::count(r.out.begin(), r.out.end(), '\n')), registry().size());
}

TEST(Verify, SingleRelation) {
  const CliRun r = invoke({"verify", "--relation", "pattern-A-eq-a"});
  EXPECT_EQ(r.code, kExitOk) << r.out << r.err;
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
}

TEST(Verify, UnknownRelationIsUsageError) {
  EXPECT_EQ(invoke({"verify", "--relation", "nope"}).code, kExitUsage);
  EXPECT_EQ(invoke({"verify"}).code, kExitUsage);
  EXPECT_EQ(invoke({"verify", "--all", "--relation", "thm-3.1"}).code, kExitUsage);
}

TEST(Verify, JsonReportWrittenAtomically) {
  const fs::path dir = scratch_dir("json");
  const fs::path report = dir / "r.json";
  const CliRun r = invoke({"verify", "--relation", "thm-3.2", "--relation", "pattern-A-eq-a", "--relation",
                     "thm-3.2", "--samples", "5", "--report", report.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  int files = 0;
  for (const auto& entry : fs::directory_iterator(dir)) {
    ++files;
    EXPECT_EQ(entry.path().filename(), "r.json");
  }
  EXPECT_EQ(files, 1);
  const json j = json::parse(slurp(report));
  EXPECT_EQ(j["seed"], 42);
  ASSERT_EQ(j["relations"].size(), 2u);  // deduplicated, sorted by id
  EXPECT_EQ(j["relations"][0]["relation_id"], "pattern-A-eq-a");
  EXPECT_EQ(j["relations"][1]["relation_id"], "thm-3.2");
  EXPECT_EQ(j["relations"][0]["samples"], 5);
  fs::remove_all(dir);
}

TEST(Verify, CsvReport) {
  const fs::path dir = scratch_dir("csv");
  const fs::path report = dir / "r.csv";
  ASSERT_EQ(invoke({"verify", "--relation", "thm-3.1", "--samples", "3", "--report", report.string()}).code,
            kExitOk);
  const std::string body = slurp(report);
  EXPECT_EQ(body.rfind("relation_id,samples,max_residual,pass\n", 0), 0u) << body;
  EXPECT_NE(body.find("\nthm-3.1,3,"), std::string::npos) << body;
  fs::remove_all(dir);
}

TEST(Verify, UnwritableReportIsUsageError) {
  const CliRun r = invoke({"verify", "--relation", "thm-3.1", "--samples", "2", "--report",
                           "/nonexistent-dir/r.json"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_FALSE(r.err.empty());
}

TEST(Verify, SeedDeterminism) {
  const std::vector<std::string> args = {"--format", "json", "verify", "--relation", "thm-4.2",
                                         "--samples", "6", "--seed", "7"};
  auto with_jobs = [&](const char* jobs) {
    auto a = args;
    a.insert(a.end(), {"--jobs", jobs});
    return invoke(a).out;
  };
  EXPECT_EQ(with_jobs("1"), with_jobs("3"));
}

TEST(Verify, PrecisionFromEnvironment) {
  ::setenv("QCONTIG_PRECISION", "extended", 1);
  const CliRun r = invoke({"--format", "json", "verify", "--relation", "thm-3.1", "--samples", "2"});
  ::unsetenv("QCONTIG_PRECISION");
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["policy"]["mode"], "extended");
  EXPECT_LT(j["relations"][0]["max_residual"].get<double>(), 1e-25);
}

TEST(Limit, PatternPairDecreases) {
  const CliRun r = invoke({"--format", "json", "limit", "--pair", "pattern-A-eq-a:cor-pattern-A-eq-a"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(json::parse(r.out)["decreasing"].get<bool>());
}

TEST(Limit, SingleEpsilonIsTriviallyDecreasing) {
  EXPECT_EQ(invoke({"limit", "--pair", "thm-3.4:cor-thm-3.4", "--eps", "1e-3"}).code, kExitOk);
}

TEST(Limit, MalformedPair) {
  EXPECT_EQ(invoke({"limit", "--pair", "pattern-A-eq-a"}).code, kExitUsage);
  EXPECT_EQ(invoke({"limit", "--pair", "pattern-A-eq-a:"}).code, kExitUsage);
  EXPECT_EQ(invoke({"limit", "--pair", "pattern-A-eq-a:cor-thm-4.1"}).code, kExitUsage);
  EXPECT_EQ(invoke({"limit", "--pair", "pattern-A-eq-a:cor-pattern-A-eq-a", "--eps", "1e-2,x"}).code, kExitUsage);
}

// The installed binaries, driven through the shell.
TEST(Binary, ExitCodes) {
  const std::string cli = QCONTIG_CLI_PATH;
  EXPECT_EQ(shell_exit(cli + " verify --relation pattern-A-eq-a > /dev/null"), 0);
  EXPECT_EQ(shell_exit(cli + " verify --relation nope 2> /dev/null"), 2);
  EXPECT_EQ(shell_exit(cli + " --max-terms 100 eval --kind 1phi0 --num 0 --q 0.5 --z 0.9 > /dev/null"), 3);
}

TEST(Binary, MutantFailsTheAffectedRelation) {
  const std::string mutant = QCONTIG_MUTANT_PATH;
  EXPECT_EQ(shell_exit(mutant + " verify --relation thm-4.1 > /dev/null"), 1);
  EXPECT_EQ(shell_exit(mutant + " verify --relation thm-3.1 > /dev/null"), 0);
}
