#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "frobcalc/cli/commands.hpp"

using nlohmann::json;
namespace cli = frobcalc::cli;
namespace fs = std::filesystem;

namespace {

struct Invocation {
  int exit_code = -1;
  std::string out;
};

Invocation invoke(const std::string& args) {
  const std::string command = std::string(FROBCALC_CLI_PATH) + " " + args + " 2>/dev/null";
  Invocation inv;
  FILE* pipe = ::popen(command.c_str(), "r");
  if (pipe == nullptr) return inv;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) inv.out.append(buf.data(), n);
  const int status = ::pclose(pipe);
  inv.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return inv;
}

json load(const fs::path& path) {
  std::ifstream in(path);
  return json::parse(in);
}

std::vector<fs::path> corpus() {
  std::vector<fs::path> out;
  for (const auto& entry : fs::directory_iterator(FROBCALC_CORPUS_DIR)) out.push_back(entry.path());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(CliBinary, CuspLocus) {
  Invocation inv = invoke("fpure-locus --ring 'GF(2)[x,y]' --ideal 'y^2+x^3'");
  ASSERT_EQ(inv.exit_code, 0);
  json report = json::parse(inv.out);
  EXPECT_EQ(report["schema_version"], cli::kSchemaVersion);
  EXPECT_EQ(report["result"]["locus_ideal"], json({"x", "y"}));
  EXPECT_EQ(report["request"]["e"], 1);
}

TEST(CliBinary, FiltrationCheck) {
  Invocation inv = invoke("filtration-check --c 2 --b 3 --p 3");
  ASSERT_EQ(inv.exit_code, 0);
  json report = json::parse(inv.out);
  EXPECT_TRUE(report["result"]["all_pass"].get<bool>());
  EXPECT_EQ(report["result"]["step_count"], 9);
}

TEST(CliBinary, ExitCodesPerErrorClass) {
  EXPECT_EQ(invoke("gb --ring 'GF(3)[x,y]' --ideal 'x^^2'").exit_code, cli::kParseError);
  EXPECT_EQ(invoke("gb --ring 'GF(4)[x,y]' --ideal 'x'").exit_code, cli::kDomainError);
  EXPECT_EQ(invoke("fedder --ring 'GF(3)[x,y]' --ideal 'x*y' --point '1,1'").exit_code, cli::kDomainError);
  EXPECT_EQ(invoke("uniform-e --ring 'GF(2)[x]' --f 'x^64' --cap 3").exit_code, cli::kPrecisionOrCapError);
  EXPECT_EQ(invoke("t1-div --p 3 --f 'X' --g 'O(deg 1; t^4)'").exit_code, cli::kPrecisionOrCapError);
  EXPECT_EQ(invoke("gb --ring 'GF(3)[x]'").exit_code, cli::kParseError);
  EXPECT_EQ(invoke("no-such-command").exit_code, cli::kParseError);
  EXPECT_EQ(invoke("run --request /nonexistent/file.json").exit_code, cli::kParseError);
}

TEST(CliBinary, ReportReRunsByteIdentically) {
  const fs::path tmp = fs::temp_directory_path() / "frobcalc_cli_roundtrip.json";
  Invocation first = invoke("split-test --ring 'GF(2)[x,y]' --ideal 'x*y' --seed 5 --out " + tmp.string());
  ASSERT_EQ(first.exit_code, 0);
  std::ifstream in(tmp);
  std::stringstream saved;
  saved << in.rdbuf();
  EXPECT_EQ(saved.str(), first.out);
  Invocation second = invoke("run --request " + tmp.string());
  EXPECT_EQ(second.exit_code, 0);
  EXPECT_EQ(second.out, first.out);
  fs::remove(tmp);
}

TEST(CliRun, CorpusRunsCleanAndRoundTrips) {
  const auto files = corpus();
  ASSERT_GE(files.size(), 10u);
  for (const auto& path : files) {
    cli::Outcome a = cli::run(load(path));
    EXPECT_EQ(a.exit_code, cli::kOk) << path << "\n" << cli::render(a.report);
    EXPECT_EQ(a.report["status"], "ok") << path;
    cli::Outcome b = cli::run(cli::extract_request(a.report));
    EXPECT_EQ(cli::render(a.report), cli::render(b.report)) << path;
  }
}

TEST(CliRun, EveryCommandIsCovered) {
  std::set<std::string> seen;
  for (const auto& path : corpus()) seen.insert(load(path)["command"].get<std::string>());
  for (const auto& name : cli::subcommands()) EXPECT_TRUE(seen.count(name)) << name;
}

TEST(CliRun, NormalizationFillsDefaults) {
  ::unsetenv("FROBCALC_PRECISION");
  json req = cli::normalize_request({{"command", "tate-split"}, {"p", 3}, {"f", "X"}, {"w", 1}});
  EXPECT_EQ(req["d"], 3);
  EXPECT_EQ(req["precision"], 64);
  EXPECT_EQ(req["w"], "1");
  EXPECT_EQ(req["seed"], 0);
  EXPECT_EQ(req["parallel"], false);
  ::setenv("FROBCALC_PRECISION", "20", 1);
  EXPECT_EQ(cli::normalize_request({{"command", "gauss-norm"}, {"p", 2}, {"series", "X"}})["precision"], 20);
  ::unsetenv("FROBCALC_PRECISION");
  EXPECT_EQ(cli::normalize_request({{"command", "filtration-check"}, {"p", 2}, {"c", 2}, {"b", 2}})["nvars"], 2);
}

TEST(CliRun, RequestErrorsAreParseErrors) {
  EXPECT_EQ(cli::run({{"command", "gb"}, {"ring", "GF(3)[x]"}, {"ideal", "x"}, {"bogus", 1}}).exit_code,
            cli::kParseError);
  EXPECT_EQ(cli::run({{"command", "gb"}, {"ring", 3}, {"ideal", "x"}}).exit_code, cli::kParseError);
  EXPECT_EQ(cli::run(json::array()).exit_code, cli::kParseError);
  cli::Outcome o = cli::run({{"command", "colon"}, {"ring", "GF(3)[x]"}, {"ideal", "x"}});
  EXPECT_EQ(o.exit_code, cli::kParseError);
  EXPECT_EQ(o.report["status"], "error");
  EXPECT_EQ(o.report["error"]["kind"], "parse");
  EXPECT_FALSE(o.diagnostic.empty());
}

TEST(CliRun, CapErrorCarriesPartialRoots) {
  cli::Outcome o = cli::run({{"command", "uniform-e"}, {"ring", "GF(2)[x]"}, {"f", "x^16"}, {"cap", 2}});
  EXPECT_EQ(o.exit_code, cli::kPrecisionOrCapError);
  EXPECT_EQ(o.report["error"]["details"]["partial_roots"], json({{"x^8"}, {"x^4"}}));
}

TEST(CliRun, SeedIsRecordedAndDeterministic) {
  json req = {{"command", "selftest"}, {"seed", 3}, {"trials", 2}};
  cli::Outcome a = cli::run(req);
  cli::Outcome b = cli::run(req);
  EXPECT_EQ(a.exit_code, cli::kOk);
  EXPECT_EQ(a.report["request"]["seed"], 3);
  EXPECT_EQ(cli::render(a.report), cli::render(b.report));
}
