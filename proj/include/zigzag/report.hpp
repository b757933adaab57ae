#pragma once

#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "zigzag/absolute_retract.hpp"
#include "zigzag/embedding.hpp"
#include "zigzag/hull.hpp"
#include "zigzag/metric.hpp"
#include "zigzag/retract.hpp"

namespace zigzag {

using Json = nlohmann::ordered_json;

// ---- JSON -----------------------------------------------------------------

inline Json upset_json(const UpSet& x) { return Json(to_strings(x)); }

inline UpSet upset_from_json(const Json& j) {
  if (!j.is_array()) throw input_error("distance value must be an array of words");
  std::vector<Word> ws;
  for (const auto& w : j) {
    if (!w.is_string()) throw input_error("distance value must be an array of words");
    ws.push_back(Word::parse(w.get<std::string>()));
  }
  return canonical_upset(std::move(ws));
}

/// {"vertices": [...], "d": {"x,y": [...], ...}} with [] for TOP and ["e"]
/// for ZERO. Keys follow row-major vertex order.
inline Json matrix_json(const DistanceMatrix& m) {
  Json d = Json::object();
  for (Vertex x = 0; x < m.size(); ++x)
    for (Vertex y = 0; y < m.size(); ++y) d[m.names()[x] + "," + m.names()[y]] = upset_json(m(x, y));
  return Json{{"vertices", m.names()}, {"d", std::move(d)}};
}

/// Inverse of `matrix_json`. Keys are split at the unique comma that leaves
/// two vertex names; every pair must be present.
inline DistanceMatrix matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("d"))
    throw input_error("matrix JSON needs \"vertices\" and \"d\"");
  std::vector<std::string> names = j.at("vertices").get<std::vector<std::string>>();
  DiGraph index(names);  // rejects duplicates
  DistanceMatrix m(names);
  std::vector<bool> seen(names.size() * names.size(), false);
  for (const auto& [key, value] : j.at("d").items()) {
    std::optional<std::pair<Vertex, Vertex>> pair;
    for (std::size_t cut = key.find(','); cut != std::string::npos; cut = key.find(',', cut + 1)) {
      auto x = index.find(key.substr(0, cut)), y = index.find(key.substr(cut + 1));
      if (!x || !y) continue;
      if (pair) throw input_error("ambiguous matrix key '" + key + "'");
      pair = {*x, *y};
    }
    if (!pair) throw input_error("matrix key '" + key + "' does not name two vertices");
    m.at(pair->first, pair->second) = upset_from_json(value);
    seen[pair->first * names.size() + pair->second] = true;
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) throw input_error("matrix JSON is missing pairs");
  return m;
}

inline Json names_json(const DiGraph& g, const std::vector<Vertex>& vs) {
  Json a = Json::array();
  for (Vertex v : vs) a.push_back(g.name(v));
  return a;
}

inline Json graph_json(const DiGraph& g) {
  Json arcs = Json::array();
  for (auto [x, y] : g.arcs()) arcs.push_back({g.name(x), g.name(y)});
  return Json{{"vertices", g.names()}, {"arcs", std::move(arcs)}};
}

inline Json helly_json(const DiGraph& g, const BallHellyReport& h) {
  Json j{{"helly", h.helly}, {"balls", h.ball_count}};
  if (!h.helly) {
    j["triple"] = names_json(g, {h.triple[0], h.triple[1], h.triple[2]});
    Json w = Json::array();
    for (const auto& b : h.witness)
      w.push_back({{"center", g.name(b.center)}, {"radius", to_string(b.radius)}, {"members", names_json(g, b.members)}});
    j["witness"] = std::move(w);
  }
  return j;
}

inline Json verdict_json(const DiGraph& g, const ArVerdict& v) {
  Json nc = Json::array();
  for (const auto& p : v.non_closed)
    nc.push_back({{"x", g.name(p.x)}, {"y", g.name(p.y)}, {"distance", upset_json(p.distance)},
                  {"closure", upset_json(p.closure)}});
  return Json{{"absolute_retract", v.verdict}, {"oriented", v.oriented}, {"two_helly", helly_json(g, v.helly)},
              {"acyclic", v.acyclic}, {"all_closed", v.all_closed}, {"non_closed", std::move(nc)},
              {"anomalies", v.anomalies}};
}

inline Json certificate_json(const DiGraph& g, const EmbeddingCertificate& c) {
  Json factors = Json::array();
  for (const auto& f : c.factors) {
    Json map = Json::object();
    for (Vertex v = 0; v < g.size(); ++v) map[g.name(v)] = f.position[v];
    factors.push_back({{"word", to_string(f.word)}, {"map", std::move(map)}});
  }
  Json j{{"isometric", c.isometric}, {"factor_count", c.factors.size()}, {"factors", std::move(factors)}};
  j["disconnected_bound"] = c.disconnected_bound ? Json(*c.disconnected_bound) : Json(nullptr);
  j["failure"] = c.failure ? Json{g.name(c.failure->first), g.name(c.failure->second)} : Json(nullptr);
  return j;
}

inline Json obstruction_json(const DiGraph& g, const ObstructionReport& r) {
  Json two = Json::array(), cyc = Json::array(), tr = Json::array();
  for (auto [a, b] : r.two_cycles) two.push_back({g.name(a), g.name(b)});
  for (const auto& c : r.directed_cycles) cyc.push_back(names_json(g, c));
  for (const auto& t : r.transitivity)
    tr.push_back({{"arc", {g.name(t.arc.first), g.name(t.arc.second)}},
                  {"path", names_json(g, t.path)},
                  {"missing", {g.name(t.missing.first), g.name(t.missing.second)}}});
  return Json{{"clean", r.clean()}, {"two_cycles", std::move(two)}, {"directed_cycles", std::move(cyc)},
              {"transitivity", std::move(tr)}, {"truncated", r.truncated}};
}

inline Json hull_json(const HullResult& h) {
  Json j{{"status", to_string(h.status)}, {"candidates_tried", h.candidates_tried}};
  if (h.hull) {
    j["added"] = h.added;
    j["hull"] = graph_json(*h.hull);
  }
  Json words = Json::array();
  for (const auto& e : h.embeddings) {
    Json w = Json::array();
    for (const auto& f : e.factors) w.push_back(to_string(f.word));
    words.push_back(std::move(w));
  }
  j["universe_factors"] = std::move(words);
  if (!h.message.empty()) j["message"] = h.message;
  return j;
}

inline Json retraction_json(const DiGraph& host, const RetractionResult& r) {
  Json j{{"retraction_found", r.retraction.has_value()}, {"nodes_explored", r.nodes_explored}};
  if (r.retraction) {
    Json map = Json::object();
    for (Vertex v = 0; v < host.size(); ++v) map[host.name(v)] = host.name((*r.retraction)(v));
    j["map"] = std::move(map);
  }
  return j;
}

// ---- Text -----------------------------------------------------------------

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline std::string matrix_text(const DistanceMatrix& m) {
  std::ostringstream os;
  for (Vertex x = 0; x < m.size(); ++x)
    for (Vertex y = 0; y < m.size(); ++y)
      os << "d(" << m.names()[x] << ", " << m.names()[y] << ") = " << to_string(m(x, y)) << '\n';
  return os.str();
}

inline std::string set_text(const DiGraph& g, const std::vector<Vertex>& vs) {
  std::string s = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? ", " : "") + g.name(vs[i]);
  return s + "}";
}

inline std::string helly_text(const DiGraph& g, const BallHellyReport& h) {
  std::ostringstream os;
  os << "2-Helly: " << yes_no(h.helly) << " (" << h.ball_count << " distinct balls)\n";
  if (!h.helly) {
    os << "  failing triple: " << set_text(g, {h.triple[0], h.triple[1], h.triple[2]}) << '\n';
    for (const auto& b : h.witness)
      os << "  B(" << g.name(b.center) << ", ^" << to_string(b.radius) << ") = " << set_text(g, b.members) << '\n';
  }
  return os.str();
}

inline std::string verdict_text(const DiGraph& g, const ArVerdict& v) {
  std::ostringstream os;
  os << "absolute retract: " << (v.verdict ? "true" : "false") << '\n';
  os << "oriented: " << yes_no(v.oriented) << '\n';
  os << helly_text(g, v.helly);
  os << "acyclic: " << yes_no(v.acyclic) << '\n';
  os << "all distances MacNeille-closed: " << yes_no(v.all_closed) << '\n';
  for (const auto& p : v.non_closed)
    os << "  d(" << g.name(p.x) << ", " << g.name(p.y) << ") = " << to_string(p.distance) << ", closure "
       << to_string(p.closure) << '\n';
  for (const auto& a : v.anomalies) os << "ANOMALY: " << a << '\n';
  return os.str();
}

inline std::string certificate_text(const DiGraph& g, const EmbeddingCertificate& c) {
  std::ostringstream os;
  os << "isometric: " << yes_no(c.isometric) << '\n';
  os << "factors: " << c.factors.size() << '\n';
  for (const auto& f : c.factors) {
    os << "  Z_" << to_string(f.word) << ":";
    for (Vertex v = 0; v < g.size(); ++v) os << ' ' << g.name(v) << "->" << f.position[v];
    os << '\n';
  }
  if (c.disconnected_bound) os << "disconnected pairs verified up to word length " << *c.disconnected_bound << '\n';
  if (c.failure) os << "not realized: (" << g.name(c.failure->first) << ", " << g.name(c.failure->second) << ")\n";
  return os.str();
}

inline std::string obstruction_text(const DiGraph& g, const ObstructionReport& r) {
  std::ostringstream os;
  os << "obstructions: " << (r.clean() ? "none" : "found") << '\n';
  for (auto [a, b] : r.two_cycles) os << "  2-cycle " << g.name(a) << " <-> " << g.name(b) << '\n';
  for (const auto& c : r.directed_cycles) {
    os << "  directed cycle";
    for (Vertex v : c) os << ' ' << g.name(v);
    os << '\n';
  }
  for (const auto& t : r.transitivity) {
    os << "  arc " << g.name(t.arc.first) << " -> " << g.name(t.arc.second) << " with path";
    for (Vertex v : t.path) os << ' ' << g.name(v);
    os << " lacking " << g.name(t.missing.first) << " -> " << g.name(t.missing.second) << '\n';
  }
  if (r.truncated) os << "  (path enumeration truncated)\n";
  return os.str();
}

inline std::string hull_text(const HullResult& h) {
  std::ostringstream os;
  os << "hull: " << to_string(h.status) << " (" << h.candidates_tried << " candidates)\n";
  for (const auto& e : h.embeddings) {
    os << "universe: product of";
    for (const auto& f : e.factors) os << " Z_" << to_string(f.word);
    os << '\n';
  }
  if (h.hull) {
    os << "added vertices: " << h.added.size() << '\n';
    for (const auto& a : h.added) os << "  " << a << '\n';
    os << to_dg(*h.hull);
  }
  if (!h.message.empty()) os << h.message << '\n';
  return os.str();
}

inline std::string retraction_text(const DiGraph& host, const RetractionResult& r) {
  std::ostringstream os;
  if (!r.retraction) {
    os << "retraction: none (" << r.nodes_explored << " search nodes)\n";
    return os.str();
  }
  os << "retraction: found (" << r.nodes_explored << " search nodes)\n";
  for (Vertex v = 0; v < host.size(); ++v) os << "  " << host.name(v) << " -> " << host.name((*r.retraction)(v)) << '\n';
  return os.str();
}

}  // namespace zigzag
