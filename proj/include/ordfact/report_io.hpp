#pragma once

#include "ordfact/evolve.hpp"
#include "ordfact/factorize.hpp"
#include "ordfact/lie_algebra.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace ordfact {

// JSON helpers shared by the problem and report documents. Matrices are
// nested row-major arrays of [re, im] pairs.
nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j, std::size_t dim, const std::string& context);

/// Report plus the candidate set its generator ids refer to.
struct ReportDocument {
  DecompositionReport report;
  CandidateSet candidates;
  std::vector<Provenance> provenance;  // empty unless the candidates came from a closure
};

nlohmann::json report_to_json(const DecompositionReport& report, const CandidateSet& candidates,
                              const std::vector<Provenance>& provenance = {});
ReportDocument report_from_json(const nlohmann::json& j);
ReportDocument parse_report(std::string_view text);

/// Human-readable summary; the first line is "outcome=<Outcome> steps=<N>".
void write_summary(std::ostream& os, const DecompositionReport& report, const CandidateSet& candidates);

/// Trace with columns m,t_start,t_end,generator_label,alpha,F,delta.
void write_trace_csv(std::ostream& os, const DecompositionReport& report, const CandidateSet& candidates);

/// Propagator samples: t, then re/im of each entry in row-major order.
void write_table_csv(std::ostream& os, const PropagatorTable& table);

/// Summary to `summary`; with a prefix, also <prefix>.json and <prefix>.csv.
void emit_report(const DecompositionReport& report, const CandidateSet& candidates,
                 const std::vector<Provenance>& provenance, std::ostream& summary,
                 const std::optional<std::string>& out_prefix);

/// %.17g formatting used for every emitted float.
std::string format_double(double x);

}  // namespace ordfact
