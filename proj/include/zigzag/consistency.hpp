#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "zigzag/absolute_retract.hpp"
#include "zigzag/embedding.hpp"
#include "zigzag/retract.hpp"

namespace zigzag {

/// All oriented graphs on n labeled vertices: each unordered pair is absent,
/// forward or backward. `code` enumerates 0 .. 3^(n(n-1)/2) - 1.
inline DiGraph oriented_graph_from_code(std::size_t n, std::uint64_t code) {
  DiGraph g(n);
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) {
      auto t = code % 3;
      code /= 3;
      if (t == 1) g.add_arc(a, b);
      if (t == 2) g.add_arc(b, a);
    }
  return g;
}

inline std::uint64_t oriented_graph_count(std::size_t n) {
  std::uint64_t c = 1;
  for (std::size_t i = 0; i < n * (n - 1) / 2; ++i) c *= 3;
  return c;
}

/// Random oriented extension of g by `extra` vertices that is isometric, or
/// nullopt after `attempts` tries.
template <class Rng>
std::optional<DiGraph> random_isometric_extension(const DiGraph& g, std::size_t extra, Rng& rng,
                                                  std::size_t attempts = 200) {
  const DistanceMatrix d = distance_matrix(g);
  std::uniform_int_distribution<int> pick(0, 2);
  for (std::size_t t = 0; t < attempts; ++t) {
    DiGraph h = g;
    for (std::size_t i = 0; i < extra; ++i) h.add_vertex("n" + std::to_string(i));
    for (Vertex a = 0; a < h.size(); ++a)
      for (Vertex b = std::max<Vertex>(a + 1, g.size()); b < h.size(); ++b) {
        int k = pick(rng);
        if (k == 1) h.add_arc(a, b);
        if (k == 2) h.add_arc(b, a);
      }
    DistanceMatrix dh = distance_matrix(h);
    bool iso = true;
    for (Vertex x = 0; x < g.size() && iso; ++x)
      for (Vertex y = 0; y < g.size() && iso; ++y) iso = dh(x, y) == d(x, y);
    if (iso) return h;
  }
  return std::nullopt;
}

struct ConsistencyReport {
  std::size_t graphs = 0;
  std::size_t connected = 0;
  std::size_t closed = 0;
  std::size_t absolute_retracts = 0;
  std::size_t extensions_checked = 0;
  std::vector<std::string> violations;

  bool ok() const noexcept { return violations.empty(); }
};

/// Exhaustive check over all oriented graphs on 1..max_n labeled vertices:
/// (a) for connected graphs, the product embedding is isometric iff every
///     distance is MacNeille-closed;
/// (b) a positive absolute-retract verdict has closed distances, is acyclic
///     and carries no anomalies;
/// (c) every absolute retract is a retract of a random isometric extension
///     by one or two vertices.
inline ConsistencyReport check_theorem_consistency(std::size_t max_n, std::uint64_t seed = 1) {
  ConsistencyReport r;
  std::mt19937_64 rng(seed);
  for (std::size_t n = 1; n <= max_n; ++n)
    for (std::uint64_t code = 0; code < oriented_graph_count(n); ++code) {
      DiGraph g = oriented_graph_from_code(n, code);
      ++r.graphs;
      const std::string tag = "n=" + std::to_string(n) + " code=" + std::to_string(code) + ": ";
      DistanceMatrix d = distance_matrix(g);
      bool closed = true;
      for (Vertex x = 0; x < n && closed; ++x)
        for (Vertex y = 0; y < n && closed; ++y) closed = is_macneille_closed(d(x, y));
      r.closed += closed;
      if (is_connected(g)) {
        ++r.connected;
        auto cert = embed_zigzag_product(g, 2 * n);
        if (cert.isometric != closed) r.violations.push_back(tag + "embedding isometry disagrees with closedness");
      }
      ArVerdict v = is_absolute_retract(g, d);
      if (!v.verdict) continue;
      ++r.absolute_retracts;
      if (!closed || !v.acyclic || !v.anomalies.empty())
        r.violations.push_back(tag + "absolute-retract verdict contradicts a necessary condition");
      for (std::size_t extra = 1; extra <= 2; ++extra) {
        auto h = random_isometric_extension(g, extra, rng);
        if (!h) continue;
        ++r.extensions_checked;
        std::vector<Vertex> sub(n);
        for (Vertex i = 0; i < n; ++i) sub[i] = i;
        auto res = retraction_search(*h, sub);
        if (!res.retraction) {
          r.violations.push_back(tag + "no retraction from an isometric extension by " + std::to_string(extra));
          continue;
        }
        const VertexMap& f = *res.retraction;
        bool law = is_homomorphism(f, *h, *h);
        for (Vertex i = 0; i < n; ++i) law = law && f(i) == i;
        if (!law) r.violations.push_back(tag + "retraction is not a homomorphism fixing the subgraph");
      }
    }
  return r;
}

}  // namespace zigzag
