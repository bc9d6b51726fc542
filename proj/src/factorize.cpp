#include "ordfact/factorize.hpp"

#include "ordfact/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <thread>

namespace ordfact {

std::string_view to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::Success: return "Success";
    case Outcome::Halt: return "Halt";
    case Outcome::BudgetExhausted: return "BudgetExhausted";
  }
  return "Halt";
}

Outcome parse_outcome(std::string_view name) {
  if (name == "Success") return Outcome::Success;
  if (name == "Halt") return Outcome::Halt;
  if (name == "BudgetExhausted") return Outcome::BudgetExhausted;
  throw Error(ErrorCode::InvalidArgument, "unknown outcome '" + std::string(name) + "'");
}

std::string_view to_string(TargetMode mode) { return mode == TargetMode::Running ? "running" : "final"; }

TargetMode parse_target_mode(std::string_view name) {
  if (name == "running") return TargetMode::Running;
  if (name == "final") return TargetMode::Final;
  throw Error(ErrorCode::InvalidArgument, "unknown target mode '" + std::string(name) + "'");
}

std::vector<std::string> structural_violations(const OrderedFactorization& f) {
  std::vector<std::string> out;
  double prev_end = 0.0;
  for (std::size_t q = 0; q < f.steps.size(); ++q) {
    const Step& s = f.steps[q];
    std::ostringstream where;
    where << "step " << q << ": ";
    if (s.t_start != prev_end) out.push_back(where.str() + "not contiguous with the previous step");
    if (!(s.t_end >= s.t_start)) out.push_back(where.str() + "t_end precedes t_start");
    if (s.t_end > f.t_final) out.push_back(where.str() + "ends after t_final");
    try {
      if (eval_pulse(f.family, s.params, s.t_end - s.t_start) != s.f_value) {
        out.push_back(where.str() + "f_value differs from the pulse formula");
      }
      if (eval_pulse(f.family, s.params, 0.0) != 0.0) out.push_back(where.str() + "pulse nonzero at zero duration");
    } catch (const Error& e) {
      out.push_back(where.str() + e.what());
    }
    prev_end = s.t_end;
  }
  return out;
}

Matrix partial_product(const std::vector<Step>& steps, const CandidateSet& candidates) {
  const auto d = static_cast<Eigen::Index>(candidates.dim());
  Matrix p = Matrix::Identity(d, d);
  for (const Step& s : steps) {
    if (s.generator_id >= candidates.size()) {
      throw Error(ErrorCode::BadGeneratorId, "generator " + std::to_string(s.generator_id) + " of " +
                                                 std::to_string(candidates.size()));
    }
    p = herm_expm(candidates.elements[s.generator_id], s.f_value) * p;
  }
  return p;
}

namespace {

struct Spectral {
  Eigen::VectorXd lambda;
  Matrix vectors;
  Matrix rotated_prior;  // V^dagger P
};

// Score of exp(-i F G) P against a target T, with G = V diag(lambda) V^dagger.
// Works in G's eigenbasis: A = V^dagger T and B = V^dagger P, so each
// evaluation costs O(d^2) instead of an eigendecomposition.
class CellObjective {
 public:
  CellObjective(const Spectral& spec, const Matrix& target, const PulseFamily& family, double dt,
                MatchMetric metric)
      : spec_(spec), family_(family), dt_(dt), metric_(metric), a_(spec.vectors.adjoint() * target) {
    const Matrix& b = spec_.rotated_prior;
    const Eigen::Index d = a_.rows();
    if (metric_ == MatchMetric::PhaseInvariant) {
      overlap_.resize(d);
      for (Eigen::Index j = 0; j < d; ++j) overlap_(j) = (b.row(j).array() * a_.row(j).array().conjugate()).sum();
    }
  }

  double operator()(double alpha) const {
    const double f = pulse_value(family_, alpha, dt_);
    const Matrix& b = spec_.rotated_prior;
    const Eigen::Index d = a_.rows();
    if (metric_ == MatchMetric::PhaseInvariant) {
      Complex acc(0.0, 0.0);
      for (Eigen::Index j = 0; j < d; ++j) acc += std::polar(1.0, -f * spec_.lambda(j)) * overlap_(j);
      return std::clamp(std::abs(acc) / static_cast<double>(d), 0.0, 1.0);
    }
    double dist2 = 0.0;
    for (Eigen::Index j = 0; j < d; ++j) {
      const Complex z = std::polar(1.0, -f * spec_.lambda(j));
      for (Eigen::Index k = 0; k < d; ++k) dist2 += std::norm(a_(j, k) - z * b(j, k));
    }
    return std::clamp(1.0 - std::sqrt(dist2) / (2.0 * std::sqrt(static_cast<double>(d))), 0.0, 1.0);
  }

 private:
  const Spectral& spec_;
  const PulseFamily& family_;
  double dt_;
  MatchMetric metric_;
  Matrix a_;
  Eigen::VectorXcd overlap_;
};

struct Sample {
  double alpha;
  double value;
};

template <class F>
Sample golden_section_max(const F& f, double lo, double hi, double tol) {
  constexpr double kInvPhi = 0.6180339887498949;
  tol = std::max(tol, 4.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(lo), std::abs(hi)));
  double c = hi - kInvPhi * (hi - lo);
  double d = lo + kInvPhi * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  for (int it = 0; it < 300 && (hi - lo) > tol; ++it) {
    if (fc >= fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - kInvPhi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + kInvPhi * (hi - lo);
      fd = f(d);
    }
  }
  return fc >= fd ? Sample{c, fc} : Sample{d, fd};
}

bool prefer_alpha(const Sample& a, const Sample& b) {
  if (std::abs(a.alpha) != std::abs(b.alpha)) return std::abs(a.alpha) < std::abs(b.alpha);
  return a.alpha < b.alpha;
}

// Coarse scan over the bounds, golden-section refinement around every coarse
// local maximum, then the tie rule over all evaluated points.
template <class F>
Sample maximize_alpha(const F& f, const PulseFamily& family, const FactorizeConfig& config) {
  const int m = std::max(config.coarse_points, 2);
  std::vector<Sample> coarse(static_cast<std::size_t>(m));
  const double span = family.alpha_max - family.alpha_min;
  for (int i = 0; i < m; ++i) {
    const double a = (i == m - 1) ? family.alpha_max : family.alpha_min + span * i / (m - 1);
    coarse[static_cast<std::size_t>(i)] = Sample{a, f(a)};
  }
  std::vector<Sample> evaluated = coarse;
  for (int i = 0; i < m; ++i) {
    const double fi = coarse[static_cast<std::size_t>(i)].value;
    const double left = i > 0 ? coarse[static_cast<std::size_t>(i - 1)].value : -1.0;
    const double right = i < m - 1 ? coarse[static_cast<std::size_t>(i + 1)].value : -1.0;
    if (fi < left || fi < right) continue;
    if (fi == left && fi == right) continue;  // flat
    const double lo = coarse[static_cast<std::size_t>(std::max(i - 1, 0))].alpha;
    const double hi = coarse[static_cast<std::size_t>(std::min(i + 1, m - 1))].alpha;
    evaluated.push_back(golden_section_max(f, lo, hi, config.alpha_tol));
  }
  double best = -1.0;
  for (const Sample& s : evaluated) best = std::max(best, s.value);
  const Sample* pick = nullptr;
  for (const Sample& s : evaluated) {
    if (s.value < best - config.tie_tol) continue;
    if (pick == nullptr || prefer_alpha(s, *pick)) pick = &s;
  }
  return *pick;
}

struct Cell {
  std::size_t generator = 0;
  int grid_index = 0;
  Sample best{0.0, -1.0};
};

int grid_index_of(const PropagatorTable& table, double t) {
  const GridSample g = target_at(table, t);
  if (std::abs(g.time - t) > 1e-9 * std::max(1.0, table.t_final)) {
    throw Error(ErrorCode::OffGrid, "prior steps must end on grid times");
  }
  return g.index;
}

double slice_floor(const PropagatorTable& table, const FactorizeConfig& config) {
  return config.delta_t_min > 0.0 ? config.delta_t_min : table.spacing();
}

}  // namespace

StepSearchResult optimize_step(const PropagatorTable& table, const std::vector<Step>& prior,
                               const CandidateSet& candidates, const PulseFamily& family,
                               const FactorizeConfig& config) {
  if (candidates.size() == 0) throw Error(ErrorCode::EmptyCandidates, "no candidate generators");
  if (candidates.dim() != table.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "candidate and propagator dimensions differ");
  }
  family.validate();
  const double t_start = prior.empty() ? 0.0 : prior.back().t_end;
  const int start = grid_index_of(table, t_start);
  if (start >= table.step_count) {
    throw Error(ErrorCode::NoRemainingGrid, "prior steps already reach t_final");
  }
  const double grid_start = table.time_at(start);

  const Matrix prior_product = partial_product(prior, candidates);
  std::vector<Spectral> spectra;
  spectra.reserve(candidates.size());
  for (const Matrix& g : candidates.elements) {
    require_hermitian(g);
    Eigen::SelfAdjointEigenSolver<Matrix> eig(0.5 * (g + g.adjoint()));
    spectra.push_back(Spectral{eig.eigenvalues(), eig.eigenvectors(), eig.eigenvectors().adjoint() * prior_product});
  }

  const int remaining = table.step_count - start;
  std::vector<Cell> cells;
  cells.reserve(candidates.size() * static_cast<std::size_t>(remaining));
  for (std::size_t n = 0; n < candidates.size(); ++n) {
    for (int j = start + 1; j <= table.step_count; ++j) cells.push_back(Cell{n, j, {}});
  }

  auto solve_cell = [&](Cell& cell) {
    const Matrix& target = config.target_mode == TargetMode::Running
                               ? table.unitaries[static_cast<std::size_t>(cell.grid_index)]
                               : table.unitaries.back();
    const double dt = table.time_at(cell.grid_index) - grid_start;
    const CellObjective objective(spectra[cell.generator], target, family, dt, config.metric);
    cell.best = maximize_alpha(objective, family, config);
  };

  // Cells are independent; results land in fixed slots so the reduction below
  // does not depend on scheduling.
  const int threads = std::clamp(config.threads <= 0 ? static_cast<int>(std::thread::hardware_concurrency())
                                                     : config.threads,
                                 1, std::max(1, static_cast<int>(cells.size())));
  if (threads == 1) {
    for (Cell& c : cells) solve_cell(c);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = static_cast<std::size_t>(w); i < cells.size(); i += static_cast<std::size_t>(threads)) {
          solve_cell(cells[i]);
        }
      });
    }
  }

  double best = -1.0;
  for (const Cell& c : cells) best = std::max(best, c.best.value);
  const Cell* pick = nullptr;
  for (const Cell& c : cells) {
    if (c.best.value < best - config.tie_tol) continue;
    if (pick == nullptr) {
      pick = &c;
      continue;
    }
    if (c.generator != pick->generator) {
      if (c.generator < pick->generator) pick = &c;
    } else if (c.grid_index != pick->grid_index) {
      if (c.grid_index > pick->grid_index) pick = &c;
    } else if (prefer_alpha(c.best, pick->best)) {
      pick = &c;
    }
  }

  StepSearchResult result;
  result.choice.grid_index = pick->grid_index;
  result.choice.t = table.time_at(pick->grid_index);
  result.choice.generator_id = pick->generator;
  result.choice.params = make_params(family, pick->best.alpha);
  const double dt = result.choice.t - t_start;
  result.choice.f_value = eval_pulse(family, result.choice.params, dt);
  // Report the score through the plain matrix route.
  const Matrix& target = config.target_mode == TargetMode::Running
                             ? table.unitaries[static_cast<std::size_t>(pick->grid_index)]
                             : table.unitaries.back();
  const Matrix candidate_product = herm_expm(candidates.elements[pick->generator], result.choice.f_value) * prior_product;
  result.delta = score(target, candidate_product, config.metric);
  result.nontrivial_slice = dt >= slice_floor(table, config) * (1.0 - 1e-12) && result.choice.params.alpha != 0.0;
  return result;
}

DecompositionReport run(const PropagatorTable& table, const CandidateSet& candidates, const PulseFamily& family,
                        const FactorizeConfig& config) {
  if (config.max_steps < 0) throw Error(ErrorCode::InvalidArgument, "max_steps must be >= 0");
  if (table.unitaries.empty()) throw Error(ErrorCode::EmptyGrid, "propagator table is empty");
  family.validate();

  DecompositionReport report;
  report.metric = config.metric;
  report.target_mode = config.target_mode;
  report.factorization.t_final = table.t_final;
  report.factorization.dim = table.dim();
  report.factorization.family = family;

  const Matrix identity = Matrix::Identity(static_cast<Eigen::Index>(table.dim()), static_cast<Eigen::Index>(table.dim()));
  double previous = score(*target_at(table, 0.0).unitary, identity, config.metric) - 1.0;
  int current_index = 0;
  bool budget_hit = false;
  auto& steps = report.factorization.steps;

  while (current_index < table.step_count) {
    if (static_cast<int>(steps.size()) >= config.max_steps) {
      budget_hit = true;
      break;
    }
    StepSearchResult next = optimize_step(table, steps, candidates, family, config);
    if (!(next.delta > previous)) {
      report.rejected = next;
      break;
    }
    Step s;
    s.index = static_cast<int>(steps.size()) + 1;
    s.generator_id = next.choice.generator_id;
    s.params = next.choice.params;
    s.t_start = steps.empty() ? 0.0 : steps.back().t_end;
    s.t_end = next.choice.t;
    s.f_value = next.choice.f_value;
    steps.push_back(s);
    report.per_step.push_back(next);
    report.delta_trace.push_back(next.delta);
    previous = next.delta;
    current_index = next.choice.grid_index;
  }

  const bool reached_end = current_index == table.step_count && !steps.empty();
  if (reached_end && 1.0 - report.delta_trace.back() <= config.tol_success) {
    report.outcome = Outcome::Success;
  } else if (budget_hit) {
    report.outcome = Outcome::BudgetExhausted;
  } else {
    report.outcome = Outcome::Halt;
  }
  report.final_distance = frob_distance(partial_product(steps, candidates), table.unitaries.back());
  return report;
}

double reconstruct_error(const DecompositionReport& report, const PropagatorTable& table,
                         const CandidateSet& candidates) {
  const auto& steps = report.factorization.steps;
  const double t_last = steps.empty() ? 0.0 : steps.back().t_end;
  return frob_distance(partial_product(steps, candidates), *target_at(table, t_last).unitary);
}

}  // namespace ordfact
