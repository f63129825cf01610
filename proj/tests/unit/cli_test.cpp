// Drives the kinex executable as a subprocess.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <gtest/gtest.h>

#include "json.hpp"
#include "kinex/report.hpp"

namespace {

namespace fs = std::filesystem;

struct Result {
  int code = -1;
  std::string out;
};

Result run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + KINEX_CLI_PATH + " " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("kinex_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path write(const std::string& name, const std::string& text) {
    const auto p = dir_ / name;
    std::ofstream(p) << text;
    return p;
  }

  fs::path dir_;
};

constexpr const char* kSmall =
    R"({"model":"gibbs","n_agents":100,"total_money":1000,"n_exchanges":100000,"seed":7})";

const std::string kTinyGibbs =
    " --set n_agents=100 --set total_money=100 --set n_exchanges=20000 --set burn_in=2000"
    " --set measure_every=2000";

TEST_F(CliTest, SimulateSucceeds) {
  const auto cfg = write("c.json", kSmall);
  const auto r = run("simulate --config " + cfg.string() + " --out " + (dir_ / "o").string());
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(fs::exists(dir_ / "o" / "histogram.csv"));
  EXPECT_TRUE(fs::exists(dir_ / "o" / "ccdf.csv"));
  EXPECT_EQ(kinex::read_report(dir_ / "o" / "report.json").seed, 7u);
}

TEST_F(CliTest, ConfigErrorsExitTwo) {
  const auto bad = write("bad.json", R"({"model":"gibbs","n_agent":100})");
  EXPECT_EQ(run("simulate --config " + bad.string() + " --out " + dir_.string()).code, 2);
  EXPECT_EQ(run("preset gibbs --set nonsense=1 --out " + dir_.string()).code, 2);
  EXPECT_EQ(run("preset no-such-preset --out " + dir_.string()).code, 2);
  EXPECT_EQ(run("simulate --out " + dir_.string()).code, 2);
  EXPECT_EQ(run("").code, 2);
}

TEST_F(CliTest, IoErrorsExitThree) {
  EXPECT_EQ(run("simulate --config " + (dir_ / "missing.json").string() + " --out " +
                dir_.string())
                .code,
            3);
  const auto cfg = write("c.json", kSmall);
  const auto blocker = write("file", "x");
  EXPECT_EQ(run("simulate --config " + cfg.string() + " --out " + blocker.string()).code, 3);
  EXPECT_EQ(run("analyze --samples " + (dir_ / "nope.csv").string()).code, 3);
}

TEST_F(CliTest, FailedPresetCheckExitsFour) {
  // Ten exchanges per agent is far from equilibrium.
  const auto r = run("preset gibbs --set n_agents=100 --set total_money=100 --set n_exchanges=1000"
                     " --set burn_in=0 --set measure_every=100 --out " + dir_.string());
  EXPECT_EQ(r.code, 4);
  EXPECT_NE(r.out.find("[FAIL]"), std::string::npos);
}

TEST_F(CliTest, SeedPrecedence) {
  const auto cfg = write("c.json", kSmall);
  const auto seed_of = [&](const std::string& extra, const std::string& env) {
    const auto out = dir_ / "s";
    fs::remove_all(out);
    const auto r = run("simulate --config " + cfg.string() + " --out " + out.string() + extra, env);
    EXPECT_EQ(r.code, 0);
    return kinex::read_report(out / "report.json").seed;
  };
  EXPECT_EQ(seed_of("", ""), 7u);
  EXPECT_EQ(seed_of("", "KINEX_SEED=11"), 11u);
  EXPECT_EQ(seed_of(" --seed 13", "KINEX_SEED=11"), 13u);
  EXPECT_EQ(run("simulate --config " + cfg.string() + " --out " + dir_.string(), "KINEX_SEED=x")
                .code,
            2);

  const auto preset_seed = [&](const std::string& extra, const std::string& env) {
    const auto out = dir_ / "p";
    fs::remove_all(out);
    run("preset gibbs" + kTinyGibbs + extra + " --out " + out.string(), env);
    return kinex::read_report(out / "report.json").seed;
  };
  EXPECT_EQ(preset_seed("", "KINEX_SEED=21"), 21u);
  EXPECT_EQ(preset_seed(" --set seed=22", "KINEX_SEED=21"), 22u);
}

TEST_F(CliTest, AnalyzeReadsExternalSamples) {
  std::string csv = "value\n";
  // Deterministic Pareto quantiles: P(X > x) = x^-1.
  const int n = 20000;
  for (int i = 0; i < n; ++i) csv += std::to_string(1.0 / (1.0 - (i + 0.5) / n)) + "\n";
  const auto path = write("samples.csv", csv);
  const auto r = run("analyze --samples " + path.string() + " --tail-fraction 0.05");
  ASSERT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["n"].get<int>(), n);
  EXPECT_NEAR(doc["tail"]["exponent_pdf"].get<double>(), 2.0, 0.1);
  EXPECT_EQ(doc["tail"]["k_used"].get<int>(), 1000);

  const auto junk = write("junk.csv", "value\n1\nabc\n");
  EXPECT_EQ(run("analyze --samples " + junk.string()).code, 2);
}

}  // namespace
