#pragma once

#include <string_view>

namespace ordfact {

enum class PulseKind { LinearRate, Power, RaisedCosine };

std::string_view to_string(PulseKind kind);
PulseKind parse_pulse_kind(std::string_view name);

// Parametric pulse shapes F(dt), all vanishing at dt = 0:
//   linear-rate    alpha * dt
//   power          alpha * dt^n
//   raised-cosine  alpha * (1 - cos dt)
struct PulseFamily {
  PulseKind kind = PulseKind::LinearRate;
  int n = 1;
  double alpha_min = -1.0;
  double alpha_max = 1.0;

  void validate() const;
  bool operator==(const PulseFamily&) const = default;
};

struct PulseParams {
  double alpha = 0.0;
  int n = 1;

  bool operator==(const PulseParams&) const = default;
};

PulseParams make_params(const PulseFamily& family, double alpha);

/// Throws NegativeDuration for dt < 0 and ParamOutOfBounds for params that do
/// not belong to the family.
double eval_pulse(const PulseFamily& family, const PulseParams& params, double dt);

/// Same formula without the bounds check; for the search's inner loop.
double pulse_value(const PulseFamily& family, double alpha, double dt);

}  // namespace ordfact
