// ordfact: ordered factorization of a time-evolution operator.
//
// Usage:
//   ordfact problem.json [--mode factorize|trotter|verify|closure] [--out prefix]
//                        [--t-final T] [--grid K] [--max-steps N] [--metric M]
//                        [--pulse-family KIND] [--target-mode running|final] [--tol TOL]
//
// Exit status: 0 Success, 2 Halt, 3 BudgetExhausted, 1 on any error. The
// verify and closure modes return 0 when every check passes.

#include "ordfact/driver.hpp"
#include "ordfact/error.hpp"
#include "ordfact/problem.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Greedy time-ordered factorization of a propagator into elementary exponentials"};

  std::string problem_path;
  std::optional<double> t_final;
  std::optional<int> grid;
  std::optional<int> max_steps;
  std::optional<std::string> metric;
  std::optional<std::string> pulse_family;
  std::optional<std::string> mode;
  std::optional<std::string> target_mode;
  std::optional<double> tol;
  std::optional<std::string> out_prefix;

  app.add_option("problem", problem_path, "Problem document (JSON)")->required();
  app.add_option("--t-final", t_final, "Final time");
  app.add_option("--grid", grid, "Propagator grid intervals K");
  app.add_option("--max-steps", max_steps, "Step budget");
  app.add_option("--metric", metric, "frobenius | phase-invariant");
  app.add_option("--pulse-family", pulse_family, "linear-rate | power | raised-cosine");
  app.add_option("--mode", mode, "factorize | trotter | verify | closure");
  app.add_option("--target-mode", target_mode, "running | final");
  app.add_option("--tol", tol, "Success tolerance on 1 - delta");
  app.add_option("--out", out_prefix, "Write <prefix>.json and <prefix>.csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : ordfact::kExitError;
  }

  try {
    std::ifstream in(problem_path);
    if (!in) {
      std::cerr << "error: cannot open " << problem_path << "\n";
      return ordfact::kExitError;
    }
    ordfact::ProblemDocument doc = ordfact::parse_problem(in);
    auto& cfg = doc.config;
    if (t_final) {
      if (!(*t_final > 0.0)) throw ordfact::Error(ordfact::ErrorCode::InvalidArgument, "--t-final must be positive");
      doc.t_final = *t_final;
    }
    if (grid) {
      if (*grid < 1) throw ordfact::Error(ordfact::ErrorCode::InvalidStepCount, "--grid must be >= 1");
      cfg.grid = *grid;
    }
    if (max_steps) {
      if (*max_steps < 0) throw ordfact::Error(ordfact::ErrorCode::InvalidArgument, "--max-steps must be >= 0");
      cfg.max_steps = *max_steps;
    }
    if (metric) cfg.metric = ordfact::parse_metric(*metric);
    if (pulse_family) cfg.pulse_family.kind = ordfact::parse_pulse_kind(*pulse_family);
    if (mode) cfg.mode = ordfact::parse_run_mode(*mode);
    if (target_mode) cfg.target_mode = ordfact::parse_target_mode(*target_mode);
    if (tol) cfg.tol_success = *tol;
    return ordfact::run_problem(doc, std::cout, out_prefix);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return ordfact::kExitError;
  }
}
