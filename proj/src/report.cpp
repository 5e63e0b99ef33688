#include "fixpoint/report.hpp"

#include "fixpoint/version.hpp"

namespace fixpoint {

json to_json(const Point& p) {
  if (p.is_scalar()) return p.as_scalar();
  if (p.is_pair()) return json::array({p.as_pair().first, p.as_pair().second});
  return p.as_label();
}

json to_json(const AxiomReport& r) {
  json j;
  j["axiom"] = r.axiom;
  j["pass"] = r.pass;
  j["witness_points"] = json::array();
  for (const auto& p : r.witness_points) j["witness_points"].push_back(to_json(p));
  j["witness_values"] = r.witness_values;
  j["violation"] = r.violation;
  j["note"] = r.note;
  return j;
}

json to_json(const PairVerdict& v) {
  json j;
  j["x"] = to_json(v.x);
  j["y"] = to_json(v.y);
  j["class"] = contraction_class_id(v.cls);
  j["verdict"] = verdict_name(v.verdict);
  j["gate_active"] = v.gate_active;
  j["lhs"] = v.lhs;
  return j;
}

json to_json(const ClassResult& r) {
  json j;
  j["class"] = contraction_class_id(r.cls);
  j["experimental"] = is_experimental(r.cls);
  j["status"] = class_status_name(r.status);
  j["counts"] = {{"holds", r.holds},
                 {"violated", r.violated},
                 {"vacuous", r.vacuous},
                 {"not_applicable", r.not_applicable}};
  j["witnesses"] = json::array();
  for (const auto& w : r.witnesses) j["witnesses"].push_back(to_json(w));
  j["witnesses_truncated"] = r.witnesses_truncated;
  return j;
}

json to_json(const ClassificationReport& r) {
  json j;
  j["resolution"] = r.resolution;
  j["sample_points"] = r.sample_points;
  j["ordered_pairs"] = r.ordered_pairs;
  j["tolerance"] = r.tolerance;
  j["classes"] = json::array();
  for (const auto& res : r.results) j["classes"].push_back(to_json(res));
  return j;
}

json to_json(const Orbit& o) {
  json j;
  j["termination"] = termination_name(o.termination);
  j["iterations"] = o.step_distances.size();
  j["tolerance"] = o.tolerance;
  j["x_seq"] = json::array();
  for (const auto& p : o.x_seq) j["x_seq"].push_back(to_json(p));
  j["y_seq"] = json::array();
  for (const auto& p : o.y_seq) j["y_seq"].push_back(to_json(p));
  j["step_distances"] = o.step_distances;
  if (!o.y_seq.empty()) j["limit"] = to_json(o.y_seq.back());
  return j;
}

json to_json(const CoincidenceResult& r) {
  json j;
  j["v"] = to_json(r.v);
  j["u"] = to_json(r.u);
  j["residual"] = r.residual;
  j["unique_on_sample"] = r.unique_on_sample;
  return j;
}

json to_json(const GeometricBoundReport& r) {
  json j;
  j["lambda"] = r.lambda;
  j["beta"] = r.beta;
  j["observed_deltas"] = r.observed_deltas;
  j["bound_values"] = r.bound_values;
  j["holds"] = r.holds;
  return j;
}

json report_envelope(const std::string& command, const std::string& instance_id,
                     const json& flags, const json& payload, double timing_ms) {
  json j;
  j["tool"] = tool_name;
  j["version"] = tool_version;
  j["command"] = command;
  j["instance"] = instance_id;
  j["flags"] = flags;
  j["payload"] = payload;
  j["timing_ms"] = timing_ms;
  return j;
}

}  // namespace fixpoint
