#pragma once

#include <algorithm>
#include <deque>
#include <string>
#include <vector>

#include "zigzag/digraph.hpp"
#include "zigzag/helly.hpp"
#include "zigzag/metric.hpp"

namespace zigzag {

struct NonClosedPair {
  Vertex x, y;
  UpSet distance;
  UpSet closure;
};

struct ArVerdict {
  bool verdict = false;
  bool oriented = false;
  BallHellyReport helly;
  bool acyclic = false;
  bool all_closed = false;
  std::vector<NonClosedPair> non_closed;
  /// Disagreements between the Helly verdict and the necessary conditions.
  std::vector<std::string> anomalies;
};

/// Absolute-retract test for oriented graphs: oriented and the balls with
/// principal radii have the 2-Helly property. The report also records the
/// necessary conditions (closed distances, acyclicity); a positive verdict
/// that violates one of them is reported as an anomaly.
inline ArVerdict is_absolute_retract(const DiGraph& g, const DistanceMatrix& d) {
  ArVerdict r;
  r.oriented = is_oriented(g);
  r.helly = balls_2helly(g);
  r.verdict = r.oriented && r.helly.helly;
  r.acyclic = is_acyclic(g);
  for (Vertex x = 0; x < g.size(); ++x)
    for (Vertex y = 0; y < g.size(); ++y) {
      UpSet c = macneille_closure(d(x, y));
      if (c != d(x, y)) r.non_closed.push_back({x, y, d(x, y), std::move(c)});
    }
  r.all_closed = r.non_closed.empty();
  if (r.verdict && !r.all_closed) r.anomalies.push_back("2-Helly verdict true but some distance is not MacNeille-closed");
  if (r.verdict && !r.acyclic) r.anomalies.push_back("2-Helly verdict true but the graph has a directed cycle");
  return r;
}

inline ArVerdict is_absolute_retract(const DiGraph& g) { return is_absolute_retract(g, distance_matrix(g)); }

struct ObstructionReport {
  struct TransitivityViolation {
    Arc arc;
    std::vector<Vertex> path;  // directed path from arc.first to arc.second
    Arc missing;               // pair of path vertices lacking the forced arc
  };
  std::vector<Arc> two_cycles;
  std::vector<std::vector<Vertex>> directed_cycles;  // one shortest cycle per cyclic component
  std::vector<TransitivityViolation> transitivity;
  /// True when path enumeration hit its cap for some arc.
  bool truncated = false;

  bool clean() const noexcept { return two_cycles.empty() && directed_cycles.empty() && transitivity.empty(); }
};

namespace detail {

inline std::vector<std::size_t> strong_components(const DiGraph& g) {
  // Kosaraju, iterative.
  const std::size_t n = g.size();
  std::vector<bool> seen(n, false);
  std::vector<Vertex> finish;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::pair<Vertex, std::size_t>> stack{{s, 0}};
    seen[s] = true;
    while (!stack.empty()) {
      const Vertex v = stack.back().first;
      const std::size_t i = stack.back().second;
      if (i < g.out(v).size()) {
        ++stack.back().second;
        Vertex w = g.out(v)[i];
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back({w, 0});
        }
      } else {
        finish.push_back(v);
        stack.pop_back();
      }
    }
  }
  constexpr auto unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> comp(n, unset);
  std::size_t next = 0;
  for (std::size_t k = n; k-- > 0;) {
    Vertex s = finish[k];
    if (comp[s] != unset) continue;
    std::vector<Vertex> stack{s};
    comp[s] = next;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.in(v))
        if (comp[w] == unset) {
          comp[w] = next;
          stack.push_back(w);
        }
    }
    ++next;
  }
  return comp;
}

/// Shortest directed cycle through s, staying inside its strong component.
inline std::vector<Vertex> shortest_cycle_through(const DiGraph& g, Vertex s, const std::vector<std::size_t>& comp) {
  std::vector<Vertex> parent(g.size(), g.size());
  std::deque<Vertex> queue{s};
  parent[s] = s;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.out(v)) {
      if (comp[w] != comp[s]) continue;
      if (w == s) {
        std::vector<Vertex> cycle{v};
        while (cycle.back() != s) cycle.push_back(parent[cycle.back()]);
        std::reverse(cycle.begin(), cycle.end());
        return cycle;
      }
      if (parent[w] == g.size()) {
        parent[w] = v;
        queue.push_back(w);
      }
    }
  }
  return {};
}

}  // namespace detail

/// Obstructions to embedding into a product of oriented zigzags: 2-cycles,
/// directed cycles, and arcs a -> b with a directed path a -> ... -> b of
/// length at least 3 whose vertex set does not induce a transitive
/// tournament. Path enumeration is capped at `path_cap` paths per arc.
inline ObstructionReport obstruction_check(const DiGraph& g, std::size_t path_cap = 100000) {
  ObstructionReport r;
  for (Vertex x = 0; x < g.size(); ++x)
    for (Vertex y : g.out(x))
      if (x < y && g.has_arc(y, x)) r.two_cycles.emplace_back(x, y);

  auto comp = detail::strong_components(g);
  std::vector<bool> done(g.size(), false);
  for (Vertex s = 0; s < g.size(); ++s) {
    if (done[comp[s]]) continue;
    auto cyc = detail::shortest_cycle_through(g, s, comp);
    if (cyc.empty()) continue;
    // Shortest over the whole component.
    for (Vertex t = s + 1; t < g.size(); ++t)
      if (comp[t] == comp[s]) {
        auto other = detail::shortest_cycle_through(g, t, comp);
        if (!other.empty() && other.size() < cyc.size()) cyc = std::move(other);
      }
    done[comp[s]] = true;
    r.directed_cycles.push_back(std::move(cyc));
  }

  for (auto [a, b] : g.arcs()) {
    std::vector<Vertex> path{a};
    std::vector<bool> on(g.size(), false);
    on[a] = true;
    std::size_t found = 0;
    bool reported = false;
    auto rec = [&](auto&& self, Vertex v) -> void {
      if (reported || found >= path_cap) return;
      for (Vertex w : g.out(v)) {
        if (on[w]) continue;
        if (w == b) {
          if (path.size() < 3) continue;  // need at least three arcs
          ++found;
          path.push_back(b);
          for (std::size_t i = 0; i < path.size() && !reported; ++i)
            for (std::size_t j = i + 1; j < path.size() && !reported; ++j)
              if (!g.has_arc(path[i], path[j])) {
                r.transitivity.push_back({{a, b}, path, {path[i], path[j]}});
                reported = true;
              }
          path.pop_back();
          continue;
        }
        on[w] = true;
        path.push_back(w);
        self(self, w);
        path.pop_back();
        on[w] = false;
      }
    };
    rec(rec, a);
    if (found >= path_cap) r.truncated = true;
  }
  return r;
}

}  // namespace zigzag
