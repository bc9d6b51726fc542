#include "ordfact/driver.hpp"

#include "ordfact/baseline.hpp"
#include "ordfact/error.hpp"
#include "ordfact/lie_algebra.hpp"
#include "ordfact/oracle.hpp"
#include "ordfact/report_io.hpp"

#include <algorithm>
#include <fstream>

namespace ordfact {

int exit_code(Outcome outcome) {
  switch (outcome) {
    case Outcome::Success: return kExitSuccess;
    case Outcome::Halt: return kExitHalt;
    case Outcome::BudgetExhausted: return kExitBudget;
  }
  return kExitError;
}

namespace {

struct Candidates {
  CandidateSet set;
  std::vector<Provenance> provenance;
  std::optional<LieBasis> basis;
};

Candidates build_candidates(const ProblemDocument& doc) {
  const HamiltonianSpec spec = doc.hamiltonian();
  Candidates c;
  if (doc.config.candidates == CandidateSource::Generators) {
    c.set = candidates_from_generators(spec.generators, doc.labels());
    return c;
  }
  c.basis = closure(spec.generators);
  c.set = candidates_from_basis(*c.basis, doc.labels());
  c.provenance = c.basis->provenance;
  return c;
}

int run_closure(const ProblemDocument& doc, std::ostream& out, const std::optional<std::string>& out_prefix) {
  const Candidates c = build_candidates(doc);
  const LieBasis& b = *c.basis;
  out << "closure dim=" << b.size() << " closed=" << (b.closed ? "true" : "false") << " depth=" << b.depth
      << " hilbert_dim=" << b.dim_hilbert << "\n";
  for (std::size_t k = 0; k < b.size(); ++k) out << "  e" << k << " " << c.set.labels[k] << "\n";
  if (out_prefix) {
    nlohmann::json j = nlohmann::json::array();
    for (std::size_t k = 0; k < b.size(); ++k) {
      nlohmann::json e = {{"label", c.set.labels[k]}, {"matrix", matrix_to_json(b.elements[k])}};
      if (b.provenance[k].generator) e["generator"] = *b.provenance[k].generator;
      if (b.provenance[k].parents) e["parents"] = {b.provenance[k].parents->first, b.provenance[k].parents->second};
      j.push_back(e);
    }
    const std::string path = *out_prefix + ".json";
    std::ofstream os(path);
    os << nlohmann::json{{"closed", b.closed}, {"depth", b.depth}, {"elements", j}}.dump(2) << "\n";
    if (!os) throw Error(ErrorCode::WriteFailure, path);
  }
  return kExitSuccess;
}

int run_verify(const ProblemDocument& doc, std::ostream& out) {
  const HamiltonianSpec spec = doc.hamiltonian();
  const Candidates c = build_candidates(doc);
  const FactorizeConfig cfg = doc.factorize_config();
  const PulseFamily& family = doc.config.pulse_family;
  bool ok = true;

  // Inner maximization against exhaustive enumeration on a coarse grid.
  const int k_step = std::min(doc.config.grid, 32);
  const PropagatorTable coarse = propagate(spec, doc.t_final, k_step);
  const StepSearchResult main_step = optimize_step(coarse, {}, c.set, family, cfg);
  const oracle::BruteStep brute =
      oracle::brute_force_step(coarse, {}, c.set, family, {oracle::grid_times(coarse), oracle::alpha_grid(family, 1e-2)},
                               cfg.metric, cfg.target_mode);
  const bool step_ok = main_step.delta >= brute.best_score - 1e-9;
  ok = ok && step_ok;
  out << "verify step grid=" << k_step << " main_delta=" << format_double(main_step.delta)
      << " oracle_delta=" << format_double(brute.best_score) << " main_generator=" << c.set.labels[main_step.choice.generator_id]
      << " oracle_generator=" << c.set.labels[brute.choice.generator_id] << " " << (step_ok ? "PASS" : "FAIL") << "\n";

  // Greedy run against the depth-3 sequence optimum on a three-interval grid,
  // where greedy can take at most three steps.
  const PropagatorTable tiny = propagate(spec, doc.t_final, 3);
  FactorizeConfig run_cfg = cfg;
  run_cfg.max_steps = 3;
  const DecompositionReport greedy = run(tiny, c.set, family, run_cfg);
  double spacing = 1e-2;
  while (oracle::sequence_leaf_count(3, c.set.size(), oracle::alpha_grid(family, spacing).size(), 3) >
         oracle::kMaxSequenceLeaves / 10) {
    spacing *= 2.0;
  }
  // The greedy alphas join the uniform grid so its own path is enumerated.
  std::vector<double> alphas = oracle::alpha_grid(family, spacing);
  for (const Step& st : greedy.factorization.steps) alphas.push_back(st.params.alpha);
  std::sort(alphas.begin(), alphas.end());
  const double seq =
      oracle::brute_force_sequence(tiny, c.set, family, 3, {oracle::grid_times(tiny), alphas}, cfg.metric, cfg.target_mode);
  const double greedy_delta = greedy.delta_trace.empty() ? 0.0 : greedy.delta_trace.back();
  const bool seq_ok = greedy_delta <= seq + 1e-9;
  ok = ok && seq_ok;
  out << "verify sequence grid=3 depth=3 alpha_spacing=" << format_double(spacing)
      << " greedy_delta=" << format_double(greedy_delta) << " oracle_delta=" << format_double(seq) << " "
      << (seq_ok ? "PASS" : "FAIL") << "\n";

  const auto violations = structural_violations(greedy.factorization);
  out << "verify structure violations=" << violations.size() << " " << (violations.empty() ? "PASS" : "FAIL") << "\n";
  ok = ok && violations.empty();
  return ok ? kExitSuccess : kExitError;
}

}  // namespace

int run_problem(const ProblemDocument& doc, std::ostream& out, const std::optional<std::string>& out_prefix) {
  switch (doc.config.mode) {
    case RunMode::Closure: return run_closure(doc, out, out_prefix);
    case RunMode::Verify: return run_verify(doc, out);
    case RunMode::Trotter: {
      const HamiltonianSpec spec = doc.hamiltonian();
      const PropagatorTable table = propagate(spec, doc.t_final, doc.config.grid);
      const CandidateSet gens = candidates_from_generators(spec.generators, doc.labels());
      DecompositionReport report =
          baseline_report(trotter(spec, doc.t_final, doc.config.trotter_slices, doc.config.trotter_order), table, gens,
                          doc.config.metric, doc.config.tol_success);
      emit_report(report, gens, {}, out, out_prefix);
      return exit_code(report.outcome);
    }
    case RunMode::Factorize: {
      const PropagatorTable table = propagate(doc.hamiltonian(), doc.t_final, doc.config.grid);
      const Candidates c = build_candidates(doc);
      const DecompositionReport report = run(table, c.set, doc.config.pulse_family, doc.factorize_config());
      emit_report(report, c.set, c.provenance, out, out_prefix);
      out << "reconstruct_error=" << format_double(reconstruct_error(report, table, c.set))
          << " propagator_error_estimate=" << format_double(table.estimated_error) << "\n";
      return exit_code(report.outcome);
    }
  }
  return kExitError;
}

}  // namespace ordfact
