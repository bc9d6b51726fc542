#include "ordfact/report_io.hpp"

#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct CliResult {
  int status;
  std::string out;
};

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() / (std::string("ordfact_cli_") + info->name() + "_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  CliResult invoke(const std::string& args) {
    const fs::path log = dir_ / "stdout.txt";
    const std::string cmd = std::string(ORDFACT_CLI_PATH) + " " + args + " > " + log.string() + " 2>&1";
    const int raw = std::system(cmd.c_str());
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, slurp(log)};
  }

  static std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  static std::string data(const std::string& name) { return std::string(ORDFACT_TEST_DATA) + "/" + name; }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, SuccessWritesReportFiles) {
  const std::string prefix = (dir_ / "run").string();
  const CliResult r = invoke(data("qubit_sx.json") + " --out " + prefix);
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_EQ(r.out.rfind("outcome=Success steps=1", 0), 0u) << r.out;
  ASSERT_TRUE(fs::exists(prefix + ".json"));
  ASSERT_TRUE(fs::exists(prefix + ".csv"));
  const ordfact::ReportDocument doc = ordfact::parse_report(slurp(prefix + ".json"));
  EXPECT_EQ(doc.report.outcome, ordfact::Outcome::Success);
  ASSERT_EQ(doc.report.factorization.steps.size(), 1u);
  EXPECT_EQ(doc.candidates.labels[doc.report.factorization.steps[0].generator_id], "sx");
  EXPECT_EQ(slurp(prefix + ".csv").rfind("m,t_start,t_end,generator_label,alpha,F,delta\r\n", 0), 0u);
}

TEST_F(Cli, BudgetExhaustedExitCode) {
  const CliResult r = invoke(data("driven_qubit.json") + " --max-steps 1 --tol 1e-14");
  EXPECT_EQ(r.status, 3) << r.out;
  EXPECT_EQ(r.out.rfind("outcome=BudgetExhausted steps=1", 0), 0u) << r.out;
}

TEST_F(Cli, HaltExitCode) {
  // Eight grid intervals bound the step count, and the tolerance is out of reach.
  const CliResult r = invoke(data("driven_qubit.json") + " --grid 8 --max-steps 100 --tol 1e-14");
  EXPECT_EQ(r.status, 2) << r.out;
  EXPECT_EQ(r.out.rfind("outcome=Halt", 0), 0u) << r.out;
}

TEST_F(Cli, ErrorsExitOne) {
  EXPECT_EQ(invoke((dir_ / "missing.json").string()).status, 1);
  const fs::path bad = dir_ / "bad.json";
  std::ofstream(bad) << "{\"dim\": 2,,}";
  const CliResult r = invoke(bad.string());
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.out.find("byte"), std::string::npos) << r.out;
  EXPECT_EQ(invoke(data("qubit_sx.json") + " --metric nope").status, 1);
  EXPECT_EQ(invoke(data("qubit_sx.json") + " --pulse-family gaussian").status, 1);
  EXPECT_EQ(invoke(data("qubit_sx.json") + " --grid 0").status, 1);
}

TEST_F(Cli, OverridesApply) {
  const std::string prefix = (dir_ / "ov").string();
  const CliResult r = invoke(data("qubit_sx.json") + " --t-final 0.5 --grid 16 --metric phase-invariant --target-mode final --out " + prefix);
  EXPECT_EQ(r.status, 0) << r.out;
  const ordfact::ReportDocument doc = ordfact::parse_report(slurp(prefix + ".json"));
  EXPECT_EQ(doc.report.factorization.t_final, 0.5);
  EXPECT_EQ(doc.report.metric, ordfact::MatchMetric::PhaseInvariant);
  EXPECT_EQ(doc.report.target_mode, ordfact::TargetMode::Final);
}

TEST_F(Cli, TrotterClosureAndVerifyModes) {
  const std::string prefix = (dir_ / "tr").string();
  const CliResult tr = invoke(data("driven_qubit.json") + " --mode trotter --tol 1e-2 --out " + prefix);
  EXPECT_EQ(tr.status, 0) << tr.out;
  const ordfact::ReportDocument doc = ordfact::parse_report(slurp(prefix + ".json"));
  EXPECT_EQ(doc.report.factorization.steps.size(), 16u * 3u);

  const CliResult cl = invoke(data("qubit_sx.json") + " --mode closure");
  EXPECT_EQ(cl.status, 0) << cl.out;
  EXPECT_NE(cl.out.find("closure dim=3 closed=true"), std::string::npos) << cl.out;

  const CliResult ver = invoke(data("qubit_sx.json") + " --mode verify");
  EXPECT_EQ(ver.status, 0) << ver.out;
  EXPECT_EQ(ver.out.find("FAIL"), std::string::npos) << ver.out;
}
