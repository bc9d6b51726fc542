#include "ordfact/problem.hpp"

#include "ordfact/error.hpp"
#include "ordfact/report_io.hpp"

#include <cmath>
#include <iterator>
#include <sstream>

namespace ordfact {

using nlohmann::json;

std::string_view to_string(RunMode mode) {
  switch (mode) {
    case RunMode::Factorize: return "factorize";
    case RunMode::Trotter: return "trotter";
    case RunMode::Verify: return "verify";
    case RunMode::Closure: return "closure";
  }
  return "factorize";
}

RunMode parse_run_mode(std::string_view name) {
  if (name == "factorize") return RunMode::Factorize;
  if (name == "trotter") return RunMode::Trotter;
  if (name == "verify") return RunMode::Verify;
  if (name == "closure") return RunMode::Closure;
  throw Error(ErrorCode::InvalidArgument, "unknown mode '" + std::string(name) + "'");
}

std::string_view to_string(CandidateSource source) {
  return source == CandidateSource::Closure ? "closure" : "generators";
}

CandidateSource parse_candidate_source(std::string_view name) {
  if (name == "closure") return CandidateSource::Closure;
  if (name == "generators") return CandidateSource::Generators;
  throw Error(ErrorCode::InvalidArgument, "unknown candidate source '" + std::string(name) + "'");
}

HamiltonianSpec ProblemDocument::hamiltonian() const {
  HamiltonianSpec spec;
  spec.dim = dim;
  for (const auto& g : generators) spec.generators.push_back(g.matrix);
  spec.coefficients = coefficients;
  return spec;
}

std::vector<std::string> ProblemDocument::labels() const {
  std::vector<std::string> out;
  for (const auto& g : generators) out.push_back(g.label);
  return out;
}

FactorizeConfig ProblemDocument::factorize_config() const {
  FactorizeConfig c;
  c.max_steps = config.max_steps;
  c.tol_success = config.tol_success;
  c.delta_t_min = config.delta_t_min;
  c.target_mode = config.target_mode;
  c.metric = config.metric;
  c.threads = config.threads;
  return c;
}

bool operator==(const ProblemDocument& a, const ProblemDocument& b) {
  if (a.dim != b.dim || a.t_final != b.t_final || !(a.config == b.config)) return false;
  if (a.coefficients != b.coefficients || a.generators.size() != b.generators.size()) return false;
  for (std::size_t k = 0; k < a.generators.size(); ++k) {
    const auto& x = a.generators[k];
    const auto& y = b.generators[k];
    if (x.label != y.label || x.matrix.rows() != y.matrix.rows() || x.matrix != y.matrix) return false;
  }
  return true;
}

namespace {

const json& require(const json& j, const char* key, const std::string& context) {
  auto it = j.find(key);
  if (it == j.end()) throw Error(ErrorCode::MissingField, context + key);
  return *it;
}

double finite_number(const json& j, const std::string& what) {
  if (!j.is_number()) throw Error(ErrorCode::SyntaxError, what + " must be a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) throw Error(ErrorCode::InvalidArgument, what + " must be finite");
  return x;
}

int integer(const json& j, const std::string& what) {
  if (!j.is_number_integer()) throw Error(ErrorCode::SyntaxError, what + " must be an integer");
  return j.get<int>();
}

std::string text(const json& j, const std::string& what) {
  if (!j.is_string()) throw Error(ErrorCode::SyntaxError, what + " must be a string");
  return j.get<std::string>();
}

CoefficientFunction parse_coefficient(const json& j, std::size_t index) {
  const std::string ctx = "coefficients[" + std::to_string(index) + "].";
  const std::string kind = text(require(j, "kind", ctx), ctx + "kind");
  if (kind == "constant") return coeff::Constant{finite_number(require(j, "value", ctx), ctx + "value")};
  if (kind == "polynomial") {
    coeff::Polynomial p;
    for (const json& a : require(j, "coeffs", ctx)) p.coeffs.push_back(finite_number(a, ctx + "coeffs"));
    return p;
  }
  if (kind == "sinusoid") {
    return coeff::Sinusoid{finite_number(require(j, "amplitude", ctx), ctx + "amplitude"),
                           finite_number(require(j, "omega", ctx), ctx + "omega"),
                           finite_number(require(j, "phase", ctx), ctx + "phase")};
  }
  if (kind == "table") {
    coeff::Table t;
    for (const json& s : require(j, "samples", ctx)) {
      if (!s.is_array() || s.size() != 2) throw Error(ErrorCode::SyntaxError, ctx + "samples entries are [t, value]");
      t.samples.emplace_back(finite_number(s[0], ctx + "samples"), finite_number(s[1], ctx + "samples"));
    }
    CoefficientFunction f = t;
    validate(f);
    return f;
  }
  throw Error(ErrorCode::InvalidArgument, ctx + "kind '" + kind + "' is not constant|polynomial|sinusoid|table");
}

json coefficient_to_json(const CoefficientFunction& f) {
  return std::visit(
      [](const auto& c) -> json {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, coeff::Constant>) {
          return {{"kind", "constant"}, {"value", c.value}};
        } else if constexpr (std::is_same_v<T, coeff::Polynomial>) {
          return {{"kind", "polynomial"}, {"coeffs", c.coeffs}};
        } else if constexpr (std::is_same_v<T, coeff::Sinusoid>) {
          return {{"kind", "sinusoid"}, {"amplitude", c.amplitude}, {"omega", c.omega}, {"phase", c.phase}};
        } else {
          json samples = json::array();
          for (const auto& [t, v] : c.samples) samples.push_back({t, v});
          return {{"kind", "table"}, {"samples", samples}};
        }
      },
      f);
}

PulseFamily parse_family(const json& j, PulseFamily base) {
  const std::string ctx = "config.pulse_family.";
  base.kind = parse_pulse_kind(text(require(j, "kind", ctx), ctx + "kind"));
  if (auto it = j.find("n"); it != j.end()) base.n = integer(*it, ctx + "n");
  if (auto it = j.find("alpha_min"); it != j.end()) base.alpha_min = finite_number(*it, ctx + "alpha_min");
  if (auto it = j.find("alpha_max"); it != j.end()) base.alpha_max = finite_number(*it, ctx + "alpha_max");
  base.validate();
  return base;
}

RunConfig parse_config(const json& j) {
  RunConfig c;
  if (!j.is_object()) throw Error(ErrorCode::SyntaxError, "config must be an object");
  const std::string ctx = "config.";
  if (auto it = j.find("mode"); it != j.end()) c.mode = parse_run_mode(text(*it, ctx + "mode"));
  if (auto it = j.find("metric"); it != j.end()) c.metric = parse_metric(text(*it, ctx + "metric"));
  if (auto it = j.find("pulse_family"); it != j.end()) c.pulse_family = parse_family(*it, c.pulse_family);
  if (auto it = j.find("max_steps"); it != j.end()) c.max_steps = integer(*it, ctx + "max_steps");
  if (auto it = j.find("grid"); it != j.end()) c.grid = integer(*it, ctx + "grid");
  if (auto it = j.find("tol_success"); it != j.end()) c.tol_success = finite_number(*it, ctx + "tol_success");
  if (auto it = j.find("target_mode"); it != j.end()) c.target_mode = parse_target_mode(text(*it, ctx + "target_mode"));
  if (auto it = j.find("candidates"); it != j.end()) c.candidates = parse_candidate_source(text(*it, ctx + "candidates"));
  if (auto it = j.find("delta_t_min"); it != j.end()) c.delta_t_min = finite_number(*it, ctx + "delta_t_min");
  if (auto it = j.find("trotter_slices"); it != j.end()) c.trotter_slices = integer(*it, ctx + "trotter_slices");
  if (auto it = j.find("trotter_order"); it != j.end()) c.trotter_order = integer(*it, ctx + "trotter_order");
  if (auto it = j.find("threads"); it != j.end()) c.threads = integer(*it, ctx + "threads");
  if (c.max_steps < 0) throw Error(ErrorCode::InvalidArgument, "config.max_steps must be >= 0");
  if (c.grid < 1) throw Error(ErrorCode::InvalidStepCount, "config.grid must be >= 1");
  return c;
}

ProblemDocument from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::SyntaxError, "problem document must be a JSON object");
  ProblemDocument doc;
  const int dim = integer(require(j, "dim", ""), "dim");
  if (dim < 1) throw Error(ErrorCode::DimensionMismatch, "dim must be >= 1");
  doc.dim = static_cast<std::size_t>(dim);
  doc.t_final = finite_number(require(j, "t_final", ""), "t_final");
  if (!(doc.t_final > 0.0)) throw Error(ErrorCode::InvalidArgument, "t_final must be positive");

  const json& gens = require(j, "generators", "");
  const json& coeffs = require(j, "coefficients", "");
  if (!gens.is_array() || !coeffs.is_array()) throw Error(ErrorCode::SyntaxError, "generators/coefficients must be arrays");
  if (gens.empty()) throw Error(ErrorCode::EmptyGeneratorList, "no generators");
  if (gens.size() != coeffs.size()) {
    throw Error(ErrorCode::DimensionMismatch, std::to_string(gens.size()) + " generators but " +
                                                  std::to_string(coeffs.size()) + " coefficients");
  }
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const std::string ctx = "generators[" + std::to_string(k) + "].";
    LabeledGenerator g;
    g.label = text(require(gens[k], "label", ctx), ctx + "label");
    g.matrix = matrix_from_json(require(gens[k], "matrix", ctx), doc.dim, "generator " + g.label);
    const double defect = hermiticity_defect(g.matrix);
    if (!(defect <= 1e-8)) {
      throw Error(ErrorCode::NonHermitianGenerator, "generator '" + g.label + "' has |G - G^dagger| = " + std::to_string(defect));
    }
    g.matrix = 0.5 * (g.matrix + g.matrix.adjoint()).eval();
    doc.generators.push_back(std::move(g));
  }
  for (std::size_t k = 0; k < coeffs.size(); ++k) doc.coefficients.push_back(parse_coefficient(coeffs[k], k));
  if (auto it = j.find("config"); it != j.end()) doc.config = parse_config(*it);
  return doc;
}

}  // namespace

ProblemDocument parse_problem(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::SyntaxError, "at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  try {
    return from_json(j);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::SyntaxError, e.what());
  }
}

ProblemDocument parse_problem(std::istream& in) {
  const std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_problem(std::string_view(content));
}

std::string serialize_problem(const ProblemDocument& doc) {
  json gens = json::array();
  for (const auto& g : doc.generators) gens.push_back({{"label", g.label}, {"matrix", matrix_to_json(g.matrix)}});
  json coeffs = json::array();
  for (const auto& c : doc.coefficients) coeffs.push_back(coefficient_to_json(c));
  const RunConfig& c = doc.config;
  json config = {{"mode", to_string(c.mode)},
                 {"metric", to_string(c.metric)},
                 {"pulse_family",
                  {{"kind", to_string(c.pulse_family.kind)},
                   {"n", c.pulse_family.n},
                   {"alpha_min", c.pulse_family.alpha_min},
                   {"alpha_max", c.pulse_family.alpha_max}}},
                 {"max_steps", c.max_steps},
                 {"grid", c.grid},
                 {"tol_success", c.tol_success},
                 {"target_mode", to_string(c.target_mode)},
                 {"candidates", to_string(c.candidates)},
                 {"delta_t_min", c.delta_t_min},
                 {"trotter_slices", c.trotter_slices},
                 {"trotter_order", c.trotter_order},
                 {"threads", c.threads}};
  json j = {{"dim", doc.dim}, {"t_final", doc.t_final}, {"generators", gens}, {"coefficients", coeffs}, {"config", config}};
  return j.dump(2) + "\n";
}

}  // namespace ordfact
