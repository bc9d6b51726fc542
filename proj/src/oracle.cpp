#include "ordfact/oracle.hpp"

#include "ordfact/error.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace ordfact::oracle {

namespace {

void require_grids(const CandidateSet& candidates, const SearchGrids& grids) {
  if (candidates.size() == 0) throw Error(ErrorCode::EmptyCandidates, "no candidate generators");
  if (grids.times.empty() || grids.alphas.empty()) throw Error(ErrorCode::EmptyGrid, "empty search grid");
}

const Matrix& target_for(const PropagatorTable& table, int index, TargetMode mode) {
  return mode == TargetMode::Running ? table.unitaries[static_cast<std::size_t>(index)] : table.unitaries.back();
}

// Distinct grid indices of the requested times, ascending.
std::vector<int> snapped_indices(const PropagatorTable& table, const std::vector<double>& times) {
  std::vector<int> idx;
  for (double t : times) idx.push_back(target_at(table, t).index);
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  return idx;
}

}  // namespace

BruteStep brute_force_step(const PropagatorTable& table, const std::vector<Step>& prior,
                           const CandidateSet& candidates, const PulseFamily& family, const SearchGrids& grids,
                           MatchMetric metric, TargetMode mode) {
  require_grids(candidates, grids);
  const double t_start = prior.empty() ? 0.0 : prior.back().t_end;
  const Matrix prior_product = partial_product(prior, candidates);

  BruteStep best;
  for (std::size_t n = 0; n < candidates.size(); ++n) {
    for (double t : grids.times) {
      const GridSample g = target_at(table, t);
      if (!(g.time > t_start)) continue;
      const double dt = g.time - t_start;
      for (double alpha : grids.alphas) {
        const PulseParams params = make_params(family, alpha);
        const double f = eval_pulse(family, params, dt);
        const Matrix product = herm_expm(candidates.elements[n], f) * prior_product;
        const double s = score(target_for(table, g.index, mode), product, metric);
        if (s > best.best_score) {
          best.best_score = s;
          best.choice = StepChoice{g.time, g.index, params, n, f};
        }
      }
    }
  }
  if (best.best_score < 0.0) throw Error(ErrorCode::EmptyGrid, "no grid time after the prior steps");
  return best;
}

double sequence_leaf_count(std::size_t times, std::size_t generators, std::size_t alphas, int depth) {
  // sum_k C(times, k) (generators * alphas)^k
  const double branch = static_cast<double>(generators) * static_cast<double>(alphas);
  double total = 0.0;
  double binom = 1.0;
  double power = 1.0;
  for (int k = 1; k <= depth && static_cast<std::size_t>(k) <= times; ++k) {
    binom = binom * static_cast<double>(times - static_cast<std::size_t>(k) + 1) / k;
    power *= branch;
    total += binom * power;
  }
  return total;
}

double brute_force_sequence(const PropagatorTable& table, const CandidateSet& candidates,
                            const PulseFamily& family, int depth, const SearchGrids& grids, MatchMetric metric,
                            TargetMode mode) {
  require_grids(candidates, grids);
  if (depth < 1) throw Error(ErrorCode::InvalidArgument, "depth must be >= 1");
  std::vector<int> ends = snapped_indices(table, grids.times);
  ends.erase(std::remove(ends.begin(), ends.end(), 0), ends.end());
  if (ends.empty()) throw Error(ErrorCode::EmptyGrid, "no grid time after t = 0");
  if (sequence_leaf_count(ends.size(), candidates.size(), grids.alphas.size(), depth) > kMaxSequenceLeaves) {
    throw Error(ErrorCode::SearchSpaceTooLarge, "sequence enumeration exceeds 1e7 leaves");
  }

  // Factors depend on (slice start, slice end, generator, alpha); cache them.
  std::map<std::pair<int, int>, std::vector<Matrix>> factors;
  auto factor_list = [&](int from, int to) -> const std::vector<Matrix>& {
    auto [it, fresh] = factors.try_emplace({from, to});
    if (fresh) {
      const double dt = table.time_at(to) - table.time_at(from);
      for (const Matrix& g : candidates.elements) {
        for (double alpha : grids.alphas) {
          it->second.push_back(herm_expm(g, eval_pulse(family, make_params(family, alpha), dt)));
        }
      }
    }
    return it->second;
  };

  const auto d = static_cast<Eigen::Index>(table.dim());
  double best = -1.0;
  auto descend = [&](auto& self, int from_index, std::size_t next_pos, const Matrix& product, int left) -> void {
    for (std::size_t pos = next_pos; pos < ends.size(); ++pos) {
      const int to = ends[pos];
      const Matrix& target = target_for(table, to, mode);
      for (const Matrix& f : factor_list(from_index, to)) {
        const Matrix next = f * product;
        best = std::max(best, score(target, next, metric));
        if (left > 1) self(self, to, pos + 1, next, left - 1);
      }
    }
  };
  descend(descend, 0, 0, Matrix::Identity(d, d), depth);
  return best;
}

std::vector<double> alpha_grid(const PulseFamily& family, double spacing) {
  family.validate();
  if (!(spacing > 0.0)) throw Error(ErrorCode::InvalidArgument, "alpha spacing must be positive");
  const auto intervals = static_cast<long>(std::ceil((family.alpha_max - family.alpha_min) / spacing - 1e-9));
  std::vector<double> out;
  for (long i = 0; i <= intervals; ++i) {
    out.push_back(i == intervals ? family.alpha_max
                                 : std::min(family.alpha_max, family.alpha_min + static_cast<double>(i) * spacing));
  }
  return out;
}

std::vector<double> grid_times(const PropagatorTable& table) {
  std::vector<double> out;
  for (int k = 1; k <= table.step_count; ++k) out.push_back(table.time_at(k));
  return out;
}

}  // namespace ordfact::oracle
