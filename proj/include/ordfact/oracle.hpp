#pragma once

#include "ordfact/evolve.hpp"
#include "ordfact/factorize.hpp"
#include "ordfact/lie_algebra.hpp"
#include "ordfact/pulses.hpp"

#include <cstddef>
#include <vector>

namespace ordfact::oracle {

// Exhaustive references for the greedy search. Every score goes through
// herm_expm, partial_product and score directly; nothing is shared with the
// eigenbasis shortcuts used by optimize_step.

struct SearchGrids {
  std::vector<double> times;   // end times; snapped onto the propagator grid
  std::vector<double> alphas;  // within the family bounds
};

struct BruteStep {
  double best_score = -1.0;
  StepChoice choice;
};

/// Maximum over generator x time x alpha, enumerated in that order; the first
/// maximal triple wins.
BruteStep brute_force_step(const PropagatorTable& table, const std::vector<Step>& prior,
                           const CandidateSet& candidates, const PulseFamily& family, const SearchGrids& grids,
                           MatchMetric metric = MatchMetric::Frobenius, TargetMode mode = TargetMode::Running);

inline constexpr double kMaxSequenceLeaves = 1e7;

/// Number of time-ordered sequences of 1..depth steps over the grids.
double sequence_leaf_count(std::size_t times, std::size_t generators, std::size_t alphas, int depth);

/// Best score over every time-ordered sequence of at most `depth` grid steps
/// starting at t = 0.
double brute_force_sequence(const PropagatorTable& table, const CandidateSet& candidates,
                            const PulseFamily& family, int depth, const SearchGrids& grids,
                            MatchMetric metric = MatchMetric::Frobenius, TargetMode mode = TargetMode::Running);

/// Evenly spaced alpha grid over the family bounds with the given spacing
/// (both bounds included).
std::vector<double> alpha_grid(const PulseFamily& family, double spacing);

/// Every propagator grid time after t = 0.
std::vector<double> grid_times(const PropagatorTable& table);

}  // namespace ordfact::oracle
