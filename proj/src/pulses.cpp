#include "ordfact/pulses.hpp"

#include "ordfact/error.hpp"

#include <cmath>
#include <string>

namespace ordfact {

std::string_view to_string(PulseKind kind) {
  switch (kind) {
    case PulseKind::LinearRate: return "linear-rate";
    case PulseKind::Power: return "power";
    case PulseKind::RaisedCosine: return "raised-cosine";
  }
  return "linear-rate";
}

PulseKind parse_pulse_kind(std::string_view name) {
  if (name == "linear-rate") return PulseKind::LinearRate;
  if (name == "power") return PulseKind::Power;
  if (name == "raised-cosine") return PulseKind::RaisedCosine;
  throw Error(ErrorCode::UnknownPulseFamily, "'" + std::string(name) + "'");
}

void PulseFamily::validate() const {
  if (!(alpha_min < alpha_max) || !std::isfinite(alpha_min) || !std::isfinite(alpha_max)) {
    throw Error(ErrorCode::InvalidArgument, "pulse bounds need alpha_min < alpha_max");
  }
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "pulse exponent n must be >= 1");
}

PulseParams make_params(const PulseFamily& family, double alpha) {
  return PulseParams{alpha, family.kind == PulseKind::Power ? family.n : 1};
}

double pulse_value(const PulseFamily& family, double alpha, double dt) {
  if (dt == 0.0) return 0.0;
  switch (family.kind) {
    case PulseKind::LinearRate: return alpha * dt;
    case PulseKind::Power: return alpha * std::pow(dt, family.n);
    case PulseKind::RaisedCosine: return alpha * (1.0 - std::cos(dt));
  }
  return 0.0;
}

double eval_pulse(const PulseFamily& family, const PulseParams& params, double dt) {
  if (dt < 0.0) throw Error(ErrorCode::NegativeDuration, "dt = " + std::to_string(dt));
  if (!(params.alpha >= family.alpha_min && params.alpha <= family.alpha_max)) {
    throw Error(ErrorCode::ParamOutOfBounds, "alpha = " + std::to_string(params.alpha) + " outside [" +
                                                 std::to_string(family.alpha_min) + ", " +
                                                 std::to_string(family.alpha_max) + "]");
  }
  if (family.kind == PulseKind::Power && params.n != family.n) {
    throw Error(ErrorCode::ParamOutOfBounds, "exponent differs from the family's n");
  }
  return pulse_value(family, params.alpha, dt);
}

}  // namespace ordfact
