#pragma once

#include "ordfact/evolve.hpp"
#include "ordfact/lie_algebra.hpp"
#include "ordfact/matrix.hpp"
#include "ordfact/pulses.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ordfact {

// One elementary factor exp(-i F G_p) acting on [t_start, t_end].
struct Step {
  int index = 0;
  std::size_t generator_id = 0;
  PulseParams params;
  double t_start = 0.0;
  double t_end = 0.0;
  double f_value = 0.0;

  bool operator==(const Step&) const = default;
};

struct OrderedFactorization {
  std::vector<Step> steps;
  double t_final = 0.0;
  std::size_t dim = 0;
  PulseFamily family;

  bool operator==(const OrderedFactorization&) const = default;
};

/// Problems with contiguity, monotone times, F(0) = 0 and f_value consistency;
/// empty when the factorization is well formed.
std::vector<std::string> structural_violations(const OrderedFactorization& f);

struct StepChoice {
  double t = 0.0;
  int grid_index = 0;
  PulseParams params;
  std::size_t generator_id = 0;
  double f_value = 0.0;

  bool operator==(const StepChoice&) const = default;
};

struct StepSearchResult {
  double delta = 0.0;
  StepChoice choice;
  bool nontrivial_slice = false;

  bool operator==(const StepSearchResult&) const = default;
};

enum class Outcome { Success, Halt, BudgetExhausted };
enum class TargetMode { Running, Final };

std::string_view to_string(Outcome outcome);
Outcome parse_outcome(std::string_view name);
std::string_view to_string(TargetMode mode);
TargetMode parse_target_mode(std::string_view name);

struct FactorizeConfig {
  int max_steps = 64;
  double tol_success = 1e-6;
  // Slices shorter than this are not counted as nontrivial; <= 0 means one
  // grid spacing.
  double delta_t_min = 0.0;
  TargetMode target_mode = TargetMode::Running;
  MatchMetric metric = MatchMetric::Frobenius;
  int coarse_points = 33;
  double alpha_tol = 1e-12;
  // Scores within tie_tol of the best are ranked by generator index, then
  // later end time, then smaller |alpha|.
  double tie_tol = 1e-10;
  int threads = 1;
};

struct DecompositionReport {
  OrderedFactorization factorization;
  std::vector<double> delta_trace;
  Outcome outcome = Outcome::Halt;
  double final_distance = 0.0;
  std::vector<StepSearchResult> per_step;
  // The search that fired the stopping rule; never part of the factorization.
  std::optional<StepSearchResult> rejected;
  MatchMetric metric = MatchMetric::Frobenius;
  TargetMode target_mode = TargetMode::Running;

  bool operator==(const DecompositionReport&) const = default;
};

/// Product of the steps' exponentials, later steps on the left.
Matrix partial_product(const std::vector<Step>& steps, const CandidateSet& candidates);

/// Best next factor over grid end times after the prior steps, candidates, and
/// alpha within the family bounds.
StepSearchResult optimize_step(const PropagatorTable& table, const std::vector<Step>& prior,
                               const CandidateSet& candidates, const PulseFamily& family,
                               const FactorizeConfig& config);

/// Greedy loop: accept while the optimized score strictly improves.
DecompositionReport run(const PropagatorTable& table, const CandidateSet& candidates, const PulseFamily& family,
                        const FactorizeConfig& config);

/// Distance between the accepted product and the target at the last accepted
/// end time (t = 0 for an empty factorization).
double reconstruct_error(const DecompositionReport& report, const PropagatorTable& table,
                         const CandidateSet& candidates);

}  // namespace ordfact
