#pragma once

#include "ordfact/evolve.hpp"
#include "ordfact/factorize.hpp"
#include "ordfact/lie_algebra.hpp"

namespace ordfact {

/// Fixed-schedule product formula over `slices` equal slices. Order 1 emits
/// one factor per generator in input order; order 2 is the symmetric (Strang)
/// split. Coefficients are sampled at slice midpoints, and the sub-steps of a
/// slice divide its interval equally. Generator ids index the Hamiltonian's
/// own generator list.
OrderedFactorization trotter(const HamiltonianSpec& spec, double t_final, int slices, int order);

/// Wraps a fixed-schedule factorization in the greedy report format: the
/// trace holds the single final score, the outcome is Success when it lies
/// within tol_success of 1 and Halt otherwise.
DecompositionReport baseline_report(OrderedFactorization factorization, const PropagatorTable& table,
                                    const CandidateSet& generators, MatchMetric metric, double tol_success);

}  // namespace ordfact
