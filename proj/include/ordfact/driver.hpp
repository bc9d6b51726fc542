#pragma once

#include "ordfact/factorize.hpp"
#include "ordfact/problem.hpp"

#include <optional>
#include <ostream>
#include <string>

namespace ordfact {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitHalt = 2;
inline constexpr int kExitBudget = 3;

int exit_code(Outcome outcome);

/// Runs the document's mode, writes the summary to `out` and, for report
/// producing modes, <out_prefix>.json / .csv. Returns the process exit code;
/// errors propagate as exceptions.
int run_problem(const ProblemDocument& doc, std::ostream& out, const std::optional<std::string>& out_prefix);

}  // namespace ordfact
