#include "ordfact/report_io.hpp"

#include "ordfact/error.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>

namespace ordfact {

using nlohmann::json;

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j, std::size_t dim, const std::string& context) {
  if (!j.is_array() || j.size() != dim) {
    throw Error(ErrorCode::DimensionMismatch, context + ": expected " + std::to_string(dim) + " rows");
  }
  const auto d = static_cast<Eigen::Index>(dim);
  Matrix m(d, d);
  for (Eigen::Index r = 0; r < d; ++r) {
    const json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || row.size() != dim) {
      throw Error(ErrorCode::DimensionMismatch,
                  context + ": row " + std::to_string(r) + " does not have " + std::to_string(dim) + " entries");
    }
    for (Eigen::Index c = 0; c < d; ++c) {
      const json& e = row[static_cast<std::size_t>(c)];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
        throw Error(ErrorCode::SyntaxError, context + ": entries must be [re, im] number pairs");
      }
      const double re = e[0].get<double>();
      const double im = e[1].get<double>();
      if (!std::isfinite(re) || !std::isfinite(im)) {
        throw Error(ErrorCode::InvalidArgument, context + ": non-finite matrix entry");
      }
      m(r, c) = Complex(re, im);
    }
  }
  return m;
}

namespace {

const json& field(const json& j, const char* key, const std::string& context) {
  auto it = j.find(key);
  if (it == j.end()) throw Error(ErrorCode::MissingField, context + "." + key);
  return *it;
}

json family_to_json(const PulseFamily& f) {
  return {{"kind", to_string(f.kind)}, {"n", f.n}, {"alpha_min", f.alpha_min}, {"alpha_max", f.alpha_max}};
}

PulseFamily family_from_json(const json& j) {
  PulseFamily f;
  f.kind = parse_pulse_kind(field(j, "kind", "pulse_family").get<std::string>());
  f.n = field(j, "n", "pulse_family").get<int>();
  f.alpha_min = field(j, "alpha_min", "pulse_family").get<double>();
  f.alpha_max = field(j, "alpha_max", "pulse_family").get<double>();
  return f;
}

json search_to_json(const StepSearchResult& s) {
  return {{"delta", s.delta},
          {"t", s.choice.t},
          {"grid_index", s.choice.grid_index},
          {"generator_id", s.choice.generator_id},
          {"alpha", s.choice.params.alpha},
          {"n", s.choice.params.n},
          {"f_value", s.choice.f_value},
          {"nontrivial_slice", s.nontrivial_slice}};
}

StepSearchResult search_from_json(const json& j) {
  StepSearchResult s;
  s.delta = field(j, "delta", "per_step").get<double>();
  s.choice.t = field(j, "t", "per_step").get<double>();
  s.choice.grid_index = field(j, "grid_index", "per_step").get<int>();
  s.choice.generator_id = field(j, "generator_id", "per_step").get<std::size_t>();
  s.choice.params.alpha = field(j, "alpha", "per_step").get<double>();
  s.choice.params.n = field(j, "n", "per_step").get<int>();
  s.choice.f_value = field(j, "f_value", "per_step").get<double>();
  s.nontrivial_slice = field(j, "nontrivial_slice", "per_step").get<bool>();
  return s;
}

std::string label_of(const CandidateSet& candidates, std::size_t id) {
  return id < candidates.labels.size() ? candidates.labels[id] : "g" + std::to_string(id);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

json report_to_json(const DecompositionReport& report, const CandidateSet& candidates,
                    const std::vector<Provenance>& provenance) {
  const OrderedFactorization& f = report.factorization;
  json steps = json::array();
  for (const Step& s : f.steps) {
    steps.push_back({{"index", s.index},
                     {"generator_id", s.generator_id},
                     {"generator_label", label_of(candidates, s.generator_id)},
                     {"alpha", s.params.alpha},
                     {"n", s.params.n},
                     {"t_start", s.t_start},
                     {"t_end", s.t_end},
                     {"f_value", s.f_value}});
  }
  json per_step = json::array();
  for (const auto& s : report.per_step) per_step.push_back(search_to_json(s));

  json cands = json::array();
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    json c = {{"label", label_of(candidates, k)}, {"matrix", matrix_to_json(candidates.elements[k])}};
    if (k < provenance.size()) {
      const Provenance& p = provenance[k];
      json prov = json::object();
      if (p.generator) prov["generator"] = *p.generator;
      if (p.parents) prov["parents"] = {p.parents->first, p.parents->second};
      c["provenance"] = prov;
    }
    cands.push_back(std::move(c));
  }

  return {{"outcome", to_string(report.outcome)},
          {"metric", to_string(report.metric)},
          {"target_mode", to_string(report.target_mode)},
          {"final_distance", report.final_distance},
          {"t_final", f.t_final},
          {"dim", f.dim},
          {"pulse_family", family_to_json(f.family)},
          {"delta_trace", report.delta_trace},
          {"steps", steps},
          {"per_step", per_step},
          {"rejected", report.rejected ? search_to_json(*report.rejected) : json(nullptr)},
          {"candidates", cands}};
}

ReportDocument report_from_json(const json& j) {
  ReportDocument doc;
  DecompositionReport& r = doc.report;
  const std::string ctx = "report";
  r.outcome = parse_outcome(field(j, "outcome", ctx).get<std::string>());
  r.metric = parse_metric(field(j, "metric", ctx).get<std::string>());
  r.target_mode = parse_target_mode(field(j, "target_mode", ctx).get<std::string>());
  r.final_distance = field(j, "final_distance", ctx).get<double>();
  r.factorization.t_final = field(j, "t_final", ctx).get<double>();
  r.factorization.dim = field(j, "dim", ctx).get<std::size_t>();
  r.factorization.family = family_from_json(field(j, "pulse_family", ctx));
  r.delta_trace = field(j, "delta_trace", ctx).get<std::vector<double>>();
  for (const json& s : field(j, "steps", ctx)) {
    Step step;
    step.index = field(s, "index", "steps").get<int>();
    step.generator_id = field(s, "generator_id", "steps").get<std::size_t>();
    step.params.alpha = field(s, "alpha", "steps").get<double>();
    step.params.n = field(s, "n", "steps").get<int>();
    step.t_start = field(s, "t_start", "steps").get<double>();
    step.t_end = field(s, "t_end", "steps").get<double>();
    step.f_value = field(s, "f_value", "steps").get<double>();
    r.factorization.steps.push_back(step);
  }
  for (const json& s : field(j, "per_step", ctx)) r.per_step.push_back(search_from_json(s));
  if (const json& rej = field(j, "rejected", ctx); !rej.is_null()) r.rejected = search_from_json(rej);

  if (auto it = j.find("candidates"); it != j.end()) {
    for (const json& c : *it) {
      doc.candidates.labels.push_back(field(c, "label", "candidates").get<std::string>());
      doc.candidates.elements.push_back(matrix_from_json(field(c, "matrix", "candidates"), r.factorization.dim,
                                                         "candidate " + doc.candidates.labels.back()));
      if (auto p = c.find("provenance"); p != c.end()) {
        Provenance prov;
        if (p->contains("generator")) prov.generator = (*p)["generator"].get<std::size_t>();
        if (p->contains("parents")) {
          prov.parents = std::make_pair((*p)["parents"][0].get<std::size_t>(), (*p)["parents"][1].get<std::size_t>());
        }
        doc.provenance.push_back(prov);
      }
    }
  }
  return doc;
}

ReportDocument parse_report(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::SyntaxError, "byte " + std::to_string(e.byte) + ": " + e.what());
  }
  try {
    return report_from_json(j);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::SyntaxError, e.what());
  }
}

void write_summary(std::ostream& os, const DecompositionReport& report, const CandidateSet& candidates) {
  const auto& steps = report.factorization.steps;
  os << "outcome=" << to_string(report.outcome) << " steps=" << steps.size() << "\n";
  os << "final_delta=" << (report.delta_trace.empty() ? std::string("none") : format_double(report.delta_trace.back()))
     << " final_distance=" << format_double(report.final_distance) << " metric=" << to_string(report.metric)
     << " target_mode=" << to_string(report.target_mode) << "\n";
  if (!steps.empty()) {
    os << std::left << std::setw(5) << "m" << std::setw(12) << "t_start" << std::setw(12) << "t_end" << std::setw(16)
       << "generator" << std::setw(14) << "alpha" << std::setw(14) << "F" << "delta\n";
    for (std::size_t q = 0; q < steps.size(); ++q) {
      const Step& s = steps[q];
      os << std::left << std::setw(5) << s.index << std::setw(12) << s.t_start << std::setw(12) << s.t_end
         << std::setw(16) << label_of(candidates, s.generator_id) << std::setw(14) << s.params.alpha << std::setw(14)
         << s.f_value;
      if (q < report.per_step.size()) os << report.per_step[q].delta;
      os << "\n";
    }
  }
  if (report.rejected) {
    os << "stopped: next best delta " << format_double(report.rejected->delta) << " did not improve\n";
  }
}

void write_trace_csv(std::ostream& os, const DecompositionReport& report, const CandidateSet& candidates) {
  os << "m,t_start,t_end,generator_label,alpha,F,delta\r\n";
  const auto& steps = report.factorization.steps;
  for (std::size_t q = 0; q < steps.size(); ++q) {
    const Step& s = steps[q];
    os << s.index << ',' << format_double(s.t_start) << ',' << format_double(s.t_end) << ','
       << csv_field(label_of(candidates, s.generator_id)) << ',' << format_double(s.params.alpha) << ','
       << format_double(s.f_value) << ',';
    if (q < report.per_step.size()) os << format_double(report.per_step[q].delta);
    os << "\r\n";
  }
}

void write_table_csv(std::ostream& os, const PropagatorTable& table) {
  const auto d = static_cast<Eigen::Index>(table.dim());
  os << "t";
  for (Eigen::Index r = 0; r < d; ++r) {
    for (Eigen::Index c = 0; c < d; ++c) os << ",u" << r << c << "_re,u" << r << c << "_im";
  }
  os << "\r\n";
  for (int k = 0; k <= table.step_count; ++k) {
    const Matrix& u = table.unitaries[static_cast<std::size_t>(k)];
    os << format_double(table.time_at(k));
    for (Eigen::Index r = 0; r < d; ++r) {
      for (Eigen::Index c = 0; c < d; ++c) os << ',' << format_double(u(r, c).real()) << ',' << format_double(u(r, c).imag());
    }
    os << "\r\n";
  }
}

void emit_report(const DecompositionReport& report, const CandidateSet& candidates,
                 const std::vector<Provenance>& provenance, std::ostream& summary,
                 const std::optional<std::string>& out_prefix) {
  write_summary(summary, report, candidates);
  if (!summary) throw Error(ErrorCode::WriteFailure, "summary stream");
  if (!out_prefix) return;

  const std::string json_path = *out_prefix + ".json";
  std::ofstream js(json_path);
  if (!js) throw Error(ErrorCode::WriteFailure, "cannot open " + json_path);
  js << report_to_json(report, candidates, provenance).dump(2) << "\n";
  if (!js) throw Error(ErrorCode::WriteFailure, json_path);

  const std::string csv_path = *out_prefix + ".csv";
  std::ofstream cs(csv_path, std::ios::binary);
  if (!cs) throw Error(ErrorCode::WriteFailure, "cannot open " + csv_path);
  write_trace_csv(cs, report, candidates);
  if (!cs) throw Error(ErrorCode::WriteFailure, csv_path);
}

}  // namespace ordfact
