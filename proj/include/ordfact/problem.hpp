#pragma once

#include "ordfact/evolve.hpp"
#include "ordfact/factorize.hpp"
#include "ordfact/matrix.hpp"
#include "ordfact/pulses.hpp"

#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace ordfact {

enum class RunMode { Factorize, Trotter, Verify, Closure };
enum class CandidateSource { Closure, Generators };

std::string_view to_string(RunMode mode);
RunMode parse_run_mode(std::string_view name);
std::string_view to_string(CandidateSource source);
CandidateSource parse_candidate_source(std::string_view name);

struct RunConfig {
  RunMode mode = RunMode::Factorize;
  MatchMetric metric = MatchMetric::Frobenius;
  PulseFamily pulse_family{PulseKind::LinearRate, 1, -2.0, 2.0};
  int max_steps = 64;
  int grid = kDefaultGridSteps;
  double tol_success = 1e-6;
  TargetMode target_mode = TargetMode::Running;
  CandidateSource candidates = CandidateSource::Closure;
  double delta_t_min = 0.0;
  int trotter_slices = 16;
  int trotter_order = 1;
  int threads = 1;

  bool operator==(const RunConfig&) const = default;
};

struct LabeledGenerator {
  std::string label;
  Matrix matrix;
};

struct ProblemDocument {
  std::size_t dim = 0;
  std::vector<LabeledGenerator> generators;
  std::vector<CoefficientFunction> coefficients;
  double t_final = 1.0;
  RunConfig config;

  HamiltonianSpec hamiltonian() const;
  std::vector<std::string> labels() const;
  FactorizeConfig factorize_config() const;
};

bool operator==(const ProblemDocument& a, const ProblemDocument& b);

/// Parses and validates a JSON problem document. Generators must be Hermitian
/// within 1e-8 and are stored symmetrized.
ProblemDocument parse_problem(std::istream& in);
ProblemDocument parse_problem(std::string_view text);

std::string serialize_problem(const ProblemDocument& doc);

}  // namespace ordfact
