#include "ordfact/evolve.hpp"

#include "ordfact/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ordfact {

namespace {

struct Evaluator {
  double t;

  double operator()(const coeff::Constant& c) const { return c.value; }

  double operator()(const coeff::Polynomial& p) const {
    double acc = 0.0;
    for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) acc = acc * t + *it;
    return acc;
  }

  double operator()(const coeff::Sinusoid& s) const { return s.amplitude * std::cos(s.omega * t + s.phase); }

  double operator()(const coeff::Table& tab) const {
    const auto& s = tab.samples;
    if (s.empty() || t < s.front().first || t > s.back().first) {
      throw Error(ErrorCode::OutOfTableRange, "t = " + std::to_string(t) + " outside the sampled range");
    }
    if (s.size() == 1) return s.front().second;
    auto hi = std::upper_bound(s.begin(), s.end(), t,
                               [](double x, const std::pair<double, double>& e) { return x < e.first; });
    if (hi == s.end()) return s.back().second;
    auto lo = std::prev(hi);
    const double w = (t - lo->first) / (hi->first - lo->first);
    return lo->second + w * (hi->second - lo->second);
  }
};

}  // namespace

double evaluate(const CoefficientFunction& f, double t) { return std::visit(Evaluator{t}, f); }

void validate(const CoefficientFunction& f) {
  if (const auto* tab = std::get_if<coeff::Table>(&f)) {
    if (tab->samples.empty()) throw Error(ErrorCode::InvalidArgument, "coefficient table has no samples");
    for (std::size_t k = 1; k < tab->samples.size(); ++k) {
      if (!(tab->samples[k].first > tab->samples[k - 1].first)) {
        throw Error(ErrorCode::InvalidArgument, "coefficient table times must be strictly increasing");
      }
    }
  }
}

void HamiltonianSpec::validate(double tol_herm) const {
  if (generators.empty()) throw Error(ErrorCode::EmptyGeneratorList, "Hamiltonian has no generators");
  if (generators.size() != coefficients.size()) {
    throw Error(ErrorCode::DimensionMismatch, "generator and coefficient counts differ");
  }
  for (const Matrix& g : generators) {
    if (g.rows() != static_cast<Eigen::Index>(dim) || g.cols() != static_cast<Eigen::Index>(dim)) {
      throw Error(ErrorCode::DimensionMismatch, "generator is not " + std::to_string(dim) + "x" + std::to_string(dim));
    }
    require_hermitian(g, tol_herm);
  }
  for (const auto& c : coefficients) ordfact::validate(c);
}

Matrix hamiltonian_at(const HamiltonianSpec& spec, double t) {
  Matrix h = Matrix::Zero(static_cast<Eigen::Index>(spec.dim), static_cast<Eigen::Index>(spec.dim));
  for (std::size_t n = 0; n < spec.generators.size(); ++n) {
    h += evaluate(spec.coefficients[n], t) * spec.generators[n];
  }
  return h;
}

double PropagatorTable::time_at(int k) const {
  if (k == step_count) return t_final;
  return static_cast<double>(k) * t_final / step_count;
}

Matrix midpoint_step(const HamiltonianSpec& spec, double t, double dt) {
  return herm_expm(hamiltonian_at(spec, t + 0.5 * dt), dt);
}

namespace {

Matrix final_unitary(const HamiltonianSpec& spec, double t_final, int steps) {
  const double dt = t_final / steps;
  Matrix u = Matrix::Identity(static_cast<Eigen::Index>(spec.dim), static_cast<Eigen::Index>(spec.dim));
  for (int k = 0; k < steps; ++k) u = midpoint_step(spec, k * dt, dt) * u;
  return u;
}

}  // namespace

PropagatorTable propagate(const HamiltonianSpec& spec, double t_final, int steps) {
  if (steps < 1) throw Error(ErrorCode::InvalidStepCount, "step count must be >= 1");
  if (!(t_final > 0.0) || !std::isfinite(t_final)) {
    throw Error(ErrorCode::InvalidArgument, "t_final must be positive and finite");
  }
  spec.validate();

  PropagatorTable table;
  table.t_final = t_final;
  table.step_count = steps;
  table.unitaries.reserve(static_cast<std::size_t>(steps) + 1);

  const int fine_steps = 2 * steps;
  const double dt = t_final / fine_steps;
  Matrix u = Matrix::Identity(static_cast<Eigen::Index>(spec.dim), static_cast<Eigen::Index>(spec.dim));
  table.unitaries.push_back(u);
  for (int k = 0; k < fine_steps; ++k) {
    // Left multiplication: later times act on the left.
    u = midpoint_step(spec, k * dt, dt) * u;
    if (k % 2 == 1) table.unitaries.push_back(u);
  }

  table.estimated_error = frob_distance(final_unitary(spec, t_final, steps), table.unitaries.back());
  return table;
}

GridSample target_at(const PropagatorTable& table, double t) {
  if (table.unitaries.empty()) throw Error(ErrorCode::EmptyGrid, "propagator table is empty");
  const double h = table.spacing();
  if (!std::isfinite(t) || t < -0.5 * h || t > table.t_final + 0.5 * h) {
    throw Error(ErrorCode::OffGrid, "t = " + std::to_string(t) + " lies outside the propagator grid");
  }
  int k = static_cast<int>(std::lround(t / h));
  k = std::clamp(k, 0, table.step_count);
  return GridSample{k, table.time_at(k), &table.unitaries[static_cast<std::size_t>(k)]};
}

}  // namespace ordfact
