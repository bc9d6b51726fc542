#include "ordfact/baseline.hpp"

#include "ordfact/error.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace ordfact {

namespace {

struct Factor {
  std::size_t generator;
  double angle;
};

}  // namespace

OrderedFactorization trotter(const HamiltonianSpec& spec, double t_final, int slices, int order) {
  if (slices < 1) throw Error(ErrorCode::InvalidSliceCount, "slices must be >= 1");
  if (order != 1 && order != 2) throw Error(ErrorCode::InvalidArgument, "order must be 1 or 2");
  if (!(t_final > 0.0)) throw Error(ErrorCode::InvalidArgument, "t_final must be positive");
  spec.validate();

  auto slice_time = [&](int k) { return k == slices ? t_final : static_cast<double>(k) * t_final / slices; };

  OrderedFactorization out;
  out.t_final = t_final;
  out.dim = spec.dim;
  out.family = PulseFamily{PulseKind::LinearRate, 1, -1.0, 1.0};

  const std::size_t g = spec.generators.size();
  double max_rate = 0.0;
  for (int k = 0; k < slices; ++k) {
    const double t0 = slice_time(k);
    const double t1 = slice_time(k + 1);
    const double width = t1 - t0;
    const double mid = t0 + 0.5 * width;

    std::vector<Factor> factors;
    if (order == 1) {
      for (std::size_t n = 0; n < g; ++n) factors.push_back({n, evaluate(spec.coefficients[n], mid) * width});
    } else {
      for (std::size_t n = 0; n + 1 < g; ++n) factors.push_back({n, 0.5 * evaluate(spec.coefficients[n], mid) * width});
      factors.push_back({g - 1, evaluate(spec.coefficients[g - 1], mid) * width});
      for (std::size_t n = g - 1; n-- > 0;) factors.push_back({n, 0.5 * evaluate(spec.coefficients[n], mid) * width});
    }

    const auto parts = static_cast<double>(factors.size());
    for (std::size_t j = 0; j < factors.size(); ++j) {
      Step s;
      s.index = static_cast<int>(out.steps.size()) + 1;
      s.generator_id = factors[j].generator;
      s.t_start = j == 0 ? t0 : t0 + width * static_cast<double>(j) / parts;
      s.t_end = j + 1 == factors.size() ? t1 : t0 + width * static_cast<double>(j + 1) / parts;
      const double dt = s.t_end - s.t_start;
      s.params = PulseParams{factors[j].angle / dt, 1};
      s.f_value = pulse_value(out.family, s.params.alpha, dt);
      max_rate = std::max(max_rate, std::abs(s.params.alpha));
      out.steps.push_back(s);
    }
  }
  out.family.alpha_min = -(max_rate + 1.0);
  out.family.alpha_max = max_rate + 1.0;
  return out;
}

DecompositionReport baseline_report(OrderedFactorization factorization, const PropagatorTable& table,
                                    const CandidateSet& generators, MatchMetric metric, double tol_success) {
  DecompositionReport report;
  report.metric = metric;
  report.target_mode = TargetMode::Final;
  const Matrix product = partial_product(factorization.steps, generators);
  const double final_score = score(table.unitaries.back(), product, metric);
  report.delta_trace.push_back(final_score);
  report.final_distance = frob_distance(product, table.unitaries.back());
  report.outcome = 1.0 - final_score <= tol_success ? Outcome::Success : Outcome::Halt;
  report.factorization = std::move(factorization);
  return report;
}

}  // namespace ordfact
