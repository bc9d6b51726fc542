#pragma once

#include "ordfact/matrix.hpp"

#include <cstddef>
#include <utility>
#include <variant>
#include <vector>

namespace ordfact {

namespace coeff {

struct Constant {
  double value = 0.0;
  bool operator==(const Constant&) const = default;
};

// a_0 + a_1 t + ... + a_k t^k
struct Polynomial {
  std::vector<double> coeffs;
  bool operator==(const Polynomial&) const = default;
};

// amplitude * cos(omega t + phase)
struct Sinusoid {
  double amplitude = 0.0;
  double omega = 0.0;
  double phase = 0.0;
  bool operator==(const Sinusoid&) const = default;
};

// Piecewise-linear interpolation; times strictly increasing.
struct Table {
  std::vector<std::pair<double, double>> samples;
  bool operator==(const Table&) const = default;
};

}  // namespace coeff

using CoefficientFunction = std::variant<coeff::Constant, coeff::Polynomial, coeff::Sinusoid, coeff::Table>;

double evaluate(const CoefficientFunction& f, double t);
void validate(const CoefficientFunction& f);

/// H(t) = sum_n h_n(t) G_n with hbar = 1.
struct HamiltonianSpec {
  std::size_t dim = 0;
  std::vector<Matrix> generators;
  std::vector<CoefficientFunction> coefficients;

  /// Throws on unequal or empty lists, bad dimensions, or non-Hermitian generators.
  void validate(double tol_herm = kDefaultHermTol) const;
};

Matrix hamiltonian_at(const HamiltonianSpec& spec, double t);

inline constexpr int kDefaultGridSteps = 1024;

// Target propagator U(t_k) on the uniform grid t_k = k t_final / K.
struct PropagatorTable {
  double t_final = 0.0;
  int step_count = 0;
  std::vector<Matrix> unitaries;
  double estimated_error = 0.0;

  double spacing() const { return t_final / step_count; }
  double time_at(int k) const;
  std::size_t dim() const { return unitaries.empty() ? 0 : static_cast<std::size_t>(unitaries.front().rows()); }
};

/// One midpoint-exponential step exp(-i H(t + dt/2) dt).
Matrix midpoint_step(const HamiltonianSpec& spec, double t, double dt);

/// Propagates on a grid of 2K midpoint steps and samples every second entry
/// onto the K grid; estimated_error compares the K-step and 2K-step finals.
PropagatorTable propagate(const HamiltonianSpec& spec, double t_final, int steps = kDefaultGridSteps);

struct GridSample {
  int index = 0;
  double time = 0.0;
  const Matrix* unitary = nullptr;
};

/// Nearest grid entry; OffGrid beyond half a spacing outside [0, t_final].
GridSample target_at(const PropagatorTable& table, double t);

}  // namespace ordfact
