#pragma once

// JSON encodings for complexes, configurations, witnesses, and reports.
//
//   complex:        {"vertices": N, "faces": [[ids...], ...]}   facets only;
//                   optional "labels": [[copy_or_factor, id], ...] for tagged vertices
//   configuration:  {"d": D, "points": [["num/den", ...], ...], "colors": [[indices...], ...]}
//   witness:        {"faces": [[indices...], ...], "point": [...], "weights": [[...], ...]}

#include <string>
#include <vector>

#include <json.hpp>

#include "geometry.hpp"
#include "homology.hpp"
#include "index_calculus.hpp"
#include "simplicial_complex.hpp"

namespace ctv {

using nlohmann::json;

inline json complex_to_json(const SimplicialComplex& c) {
  json j;
  j["vertices"] = c.vertex_count();
  json faces = json::array();
  for (const auto& f : c.facets()) faces.push_back(f);
  j["faces"] = std::move(faces);
  bool tagged = false;
  for (const auto& v : c.vertices()) tagged = tagged || v.tag.has_value();
  if (tagged) {
    json labels = json::array();
    for (const auto& v : c.vertices()) labels.push_back(json::array({v.tag.value_or(0), v.id}));
    j["labels"] = std::move(labels);
  }
  return j;
}

inline SimplicialComplex complex_from_json(const json& j, std::size_t face_budget = kDefaultFaceBudget) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("faces"))
    throw std::invalid_argument("complex JSON needs \"vertices\" and \"faces\"");
  const auto n = j.at("vertices").get<std::size_t>();
  std::vector<Vertex> verts(n);
  for (std::size_t i = 0; i < n; ++i) verts[i].id = static_cast<std::int64_t>(i);
  if (j.contains("labels")) {
    const auto& labels = j.at("labels");
    if (labels.size() != n) throw std::invalid_argument("labels must list every vertex");
    for (std::size_t i = 0; i < n; ++i) {
      verts[i].tag = labels[i].at(0).get<std::uint32_t>();
      verts[i].id = labels[i].at(1).get<std::int64_t>();
    }
  }
  std::vector<Face> gens;
  for (const auto& f : j.at("faces")) {
    Face face = f.get<Face>();
    for (auto v : face)
      if (v >= n) throw std::invalid_argument("face references vertex " + std::to_string(v) + " >= " + std::to_string(n));
    gens.push_back(std::move(face));
  }
  // Every declared vertex is a face.
  for (std::size_t i = 0; i < n; ++i) gens.push_back({static_cast<VertexId>(i)});
  return SimplicialComplex::closure(std::move(verts), gens, face_budget);
}

inline json point_to_json(const Point& p) {
  json j = json::array();
  for (const auto& x : p) j.push_back(to_string(x));
  return j;
}

inline Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw std::invalid_argument("rational must be a \"num/den\" string or an integer");
}

inline json config_to_json(const ColoredConfiguration& c) {
  json pts = json::array();
  for (const auto& p : c.points) pts.push_back(point_to_json(p));
  return {{"d", c.d}, {"points", std::move(pts)}, {"colors", c.coloring.classes}};
}

inline ColoredConfiguration config_from_json(const json& j) {
  if (!j.is_object() || !j.contains("d") || !j.contains("points") || !j.contains("colors"))
    throw std::invalid_argument("configuration JSON needs \"d\", \"points\" and \"colors\"");
  ColoredConfiguration c;
  c.d = j.at("d").get<std::size_t>();
  for (const auto& p : j.at("points")) {
    Point pt;
    for (const auto& x : p) pt.push_back(rational_from_json(x));
    c.points.push_back(std::move(pt));
  }
  c.coloring.classes = j.at("colors").get<std::vector<std::vector<VertexId>>>();
  c.validate();
  return c;
}

inline json witness_to_json(const Witness& w) {
  json faces = json::array();
  for (const auto& f : w.faces) faces.push_back(f.vertices);
  json weights = json::array();
  for (const auto& ws : w.weights) {
    json row = json::array();
    for (const auto& x : ws) row.push_back(to_string(x));
    weights.push_back(std::move(row));
  }
  return {{"faces", std::move(faces)}, {"point", point_to_json(w.point)}, {"weights", std::move(weights)}};
}

/// Rebuilds a witness from its JSON form against a configuration (colors are
/// recovered from the configuration's coloring).
inline Witness witness_from_json(const json& j, const ColoredConfiguration& config) {
  Witness w;
  const auto color = config.coloring.color_of(config.points.size());
  for (const auto& f : j.at("faces")) {
    RainbowFace rf;
    rf.by_color.assign(config.coloring.color_count(), std::nullopt);
    rf.vertices = f.get<std::vector<std::uint32_t>>();
    for (auto v : rf.vertices) {
      if (v >= config.points.size()) throw std::invalid_argument("witness references unknown point");
      rf.by_color[color[v]] = v;
    }
    w.faces.push_back(std::move(rf));
  }
  for (const auto& x : j.at("point")) w.point.push_back(rational_from_json(x));
  for (const auto& row : j.at("weights")) {
    std::vector<Rational> ws;
    for (const auto& x : row) ws.push_back(rational_from_json(x));
    w.weights.push_back(std::move(ws));
  }
  return w;
}

inline json hconn_to_json(const HConn& h) {
  if (h.at_least) return {{"at_least", h.value}};
  return h.value;
}

inline json trace_to_json(const std::vector<TraceStep>& trace) {
  json out = json::array();
  for (const auto& s : trace) out.push_back({{"rule", s.rule}, {"statement", s.statement}, {"value", s.value}});
  return out;
}

inline json index_bound_to_json(const IndexBound& b) {
  json j{{"space", b.space}, {"trace", trace_to_json(b.trace)}};
  j["lower"] = b.lower ? json(*b.lower) : json(nullptr);
  j["upper_prime"] = b.upper_prime ? json(*b.upper_prime) : json(nullptr);
  return j;
}

inline json verdict_to_json(const Verdict& v) {
  json conds = json::array();
  for (const auto& c : v.conditions)
    conds.push_back({{"name", c.name}, {"passed", c.passed}, {"assumption", c.assumption}, {"detail", c.detail}});
  json j{{"applicable", v.applicable},
         {"q", v.q},
         {"promised_faces", v.promised_faces},
         {"target_dim", v.target_dim},
         {"m_large", v.m_large},
         {"required_index", v.required_index},
         {"conditions", std::move(conds)},
         {"trace", trace_to_json(v.trace)}};
  j["achieved_lower_bound"] = v.achieved_lower_bound ? json(*v.achieved_lower_bound) : json(nullptr);
  if (v.upgrade)
    j["upgrade"] = {{"faces", v.upgrade->faces}, {"trace", trace_to_json(v.upgrade->trace)}};
  else
    j["upgrade"] = nullptr;
  return j;
}

inline json instance_to_json(const TheoremInstance& ti) {
  return {{"d", ti.d}, {"k", ti.k}, {"m", ti.m_large}, {"p", ti.p}, {"n", ti.n}, {"sizes", ti.sizes}};
}

inline json experiment_to_json(const ExperimentReport& rep, bool include_witnesses = true) {
  json trials = json::array();
  for (const auto& t : rep.trials) {
    json jt{{"trial", t.trial},
            {"seed", t.seed},
            {"status", to_string(t.status)},
            {"lp_calls", t.lp_calls},
            {"nodes", t.nodes},
            {"certificate_ok", t.certificate_ok}};
    if (include_witnesses && t.witness) jt["witness"] = witness_to_json(*t.witness);
    trials.push_back(std::move(jt));
  }
  json cex = json::array();
  for (const auto& c : rep.counterexamples)
    cex.push_back({{"trial", c.trial}, {"seed", c.seed}, {"q", c.q}, {"configuration", config_to_json(c.config)}});
  return {{"instance", instance_to_json(rep.instance)},
          {"verdict", verdict_to_json(rep.verdict)},
          {"q", rep.q},
          {"label", rep.label},
          {"trials", rep.trials.size()},
          {"successes", rep.successes},
          {"exhausted", rep.exhausted},
          {"budget_exhausted", rep.budget_exhausted},
          {"certificate_failures", rep.certificate_failures},
          {"counterexamples", std::move(cex)},
          {"records", std::move(trials)}};
}

}  // namespace ctv
