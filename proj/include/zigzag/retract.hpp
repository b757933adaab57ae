#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "zigzag/digraph.hpp"
#include "zigzag/metric.hpp"

namespace zigzag {

/// A possibly partial map between the vertex sets of two graphs.
struct VertexMap {
  std::vector<std::optional<Vertex>> image;  // indexed by domain vertex
  std::size_t codomain_size = 0;

  VertexMap() = default;
  VertexMap(std::size_t domain_size, std::size_t codomain) : image(domain_size), codomain_size(codomain) {}

  static VertexMap from_total(std::vector<Vertex> values, std::size_t codomain) {
    VertexMap f(values.size(), codomain);
    for (std::size_t i = 0; i < values.size(); ++i) f.set(i, values[i]);
    return f;
  }

  void set(Vertex x, Vertex y) {
    if (y >= codomain_size) throw input_error("map image out of range");
    image.at(x) = y;
  }

  bool defined(Vertex x) const { return image.at(x).has_value(); }
  Vertex operator()(Vertex x) const { return image.at(x).value(); }

  bool is_total() const {
    return std::all_of(image.begin(), image.end(), [](const auto& v) { return v.has_value(); });
  }

  bool is_injective() const {
    std::vector<bool> hit(codomain_size, false);
    for (const auto& v : image)
      if (v) {
        if (hit[*v]) return false;
        hit[*v] = true;
      }
    return true;
  }

  std::vector<Vertex> domain() const {
    std::vector<Vertex> d;
    for (Vertex x = 0; x < image.size(); ++x)
      if (image[x]) d.push_back(x);
    return d;
  }

  friend bool operator==(const VertexMap&, const VertexMap&) = default;
};

/// Arcs go to arcs or collapse to a vertex, on the mapped part.
inline bool is_homomorphism(const VertexMap& f, const DiGraph& g, const DiGraph& h) {
  for (auto [x, y] : g.arcs())
    if (f.defined(x) && f.defined(y) && !h.adjacent_or_equal(f(x), f(y))) return false;
  return true;
}

/// d_H(f(x), f(y)) <= d_G(x, y) for all mapped pairs.
inline bool is_non_expansive(const VertexMap& f, const DistanceMatrix& dg, const DistanceMatrix& dh) {
  auto dom = f.domain();
  for (Vertex x : dom)
    for (Vertex y : dom)
      if (!upset_leq(dh(f(x), f(y)), dg(x, y))) return false;
  return true;
}

inline bool is_isometric_embedding(const VertexMap& f, const DistanceMatrix& dg, const DistanceMatrix& dh) {
  if (!f.is_total() || !f.is_injective()) return false;
  for (Vertex x = 0; x < dg.size(); ++x)
    for (Vertex y = 0; y < dg.size(); ++y)
      if (dh(f(x), f(y)) != dg(x, y)) return false;
  return true;
}

inline bool is_isometric_embedding(const VertexMap& f, const DiGraph& g, const DiGraph& h) {
  return is_isometric_embedding(f, distance_matrix(g), distance_matrix(h));
}

/// Inclusion of `sub` into `host` by vertex names.
inline VertexMap inclusion_by_name(const DiGraph& sub, const DiGraph& host) {
  VertexMap f(sub.size(), host.size());
  for (Vertex v = 0; v < sub.size(); ++v) {
    auto w = host.find(sub.name(v));
    if (!w) throw input_error("vertex '" + sub.name(v) + "' of the subgraph is missing from the host");
    f.set(v, *w);
  }
  return f;
}

/// Vertices z of the target such that sending x to z keeps f non-expansive:
/// z lies in every ball B(f(y), ^r) for y mapped and r a generator of
/// d_source(y, x). Generators suffice because balls grow with the radius.
inline std::vector<Vertex> extension_candidates(const DistanceMatrix& source, const DistanceMatrix& target,
                                                const VertexMap& f, Vertex x) {
  std::vector<Vertex> out;
  auto dom = f.domain();
  for (Vertex z = 0; z < target.size(); ++z) {
    bool ok = true;
    for (std::size_t i = 0; i < dom.size() && ok; ++i) ok = upset_leq(target(f(dom[i]), z), source(dom[i], x));
    if (ok) out.push_back(z);
  }
  return out;
}

/// One greedy extension step; the smallest admissible vertex, or nullopt
/// when the balls have empty intersection.
inline std::optional<Vertex> extend_map(const DistanceMatrix& source, const DistanceMatrix& target,
                                        const VertexMap& f, Vertex x) {
  if (f.defined(x)) throw input_error("extend_map: vertex is already mapped");
  auto c = extension_candidates(source, target, f, x);
  if (c.empty()) return std::nullopt;
  return c.front();
}

inline std::optional<Vertex> extend_map(const DiGraph& source, const DiGraph& target, const VertexMap& f, Vertex x) {
  return extend_map(distance_matrix(source), distance_matrix(target), f, x);
}

/// Extends f greedily over the unmapped vertices in index order. Returns
/// nullopt if some step gets stuck.
inline std::optional<VertexMap> extend_greedily(const DistanceMatrix& source, const DistanceMatrix& target,
                                                VertexMap f) {
  for (Vertex x = 0; x < source.size(); ++x) {
    if (f.defined(x)) continue;
    auto z = extend_map(source, target, f, x);
    if (!z) return std::nullopt;
    f.set(x, *z);
  }
  return f;
}

namespace detail {

/// Order in which free vertices are assigned: breadth-first from the fixed
/// part along the symmetric hull, then whatever is left.
inline std::vector<Vertex> search_order(const DiGraph& host, const std::vector<bool>& fixed) {
  std::vector<Vertex> order;
  std::vector<bool> seen = fixed;
  std::vector<Vertex> frontier;
  for (Vertex v = 0; v < host.size(); ++v)
    if (fixed[v]) frontier.push_back(v);
  for (std::size_t head = 0;; ++head) {
    if (head == frontier.size()) {
      auto it = std::find(seen.begin(), seen.end(), false);
      if (it == seen.end()) break;
      Vertex v = static_cast<Vertex>(it - seen.begin());
      seen[v] = true;
      frontier.push_back(v);
      order.push_back(v);
      continue;
    }
    Vertex v = frontier[head];
    for (const auto* nbrs : {&host.out(v), &host.in(v)})
      for (Vertex w : *nbrs)
        if (!seen[w]) {
          seen[w] = true;
          frontier.push_back(w);
          order.push_back(w);
        }
  }
  return order;
}

}  // namespace detail

struct RetractionResult {
  std::optional<VertexMap> retraction;  // host -> host vertices inside the subgraph
  std::size_t nodes_explored = 0;
};

/// Searches a homomorphism from `host` onto the vertex subset `sub` fixing
/// `sub` pointwise. The subgraph induced on `sub` must be isometric in the
/// host (checked). Chronological backtracking over extension candidates;
/// exhaustive, so `nullopt` means no retraction exists.
inline RetractionResult retraction_search(const DiGraph& host, const std::vector<Vertex>& sub,
                                          const DistanceMatrix& host_distances) {
  std::vector<bool> fixed(host.size(), false);
  for (Vertex v : sub) {
    if (v >= host.size()) throw input_error("retraction_search: subgraph vertex out of range");
    fixed[v] = true;
  }
  // Distances of the subgraph as a space of its own.
  DiGraph g = host.induced(sub);
  DistanceMatrix dg = distance_matrix(g);
  for (std::size_t i = 0; i < sub.size(); ++i)
    for (std::size_t j = 0; j < sub.size(); ++j)
      if (dg(i, j) != host_distances(sub[i], sub[j]))
        throw input_error("retraction_search: subgraph is not isometric in the host (pair " + host.name(sub[i]) +
                          ", " + host.name(sub[j]) + ")");

  RetractionResult result;
  VertexMap f(host.size(), host.size());
  for (Vertex v : sub) f.set(v, v);
  auto order = detail::search_order(host, fixed);

  auto candidates = [&](Vertex x) {
    std::vector<Vertex> out;
    for (Vertex z : sub) {
      bool ok = true;
      for (Vertex y = 0; y < host.size() && ok; ++y)
        if (f.defined(y)) ok = upset_leq(host_distances(f(y), z), host_distances(y, x));
      if (ok) out.push_back(z);
    }
    std::sort(out.begin(), out.end());
    return out;
  };

  auto rec = [&](auto&& self, std::size_t depth) -> bool {
    ++result.nodes_explored;
    if (depth == order.size()) return true;
    Vertex x = order[depth];
    for (Vertex z : candidates(x)) {
      f.set(x, z);
      if (self(self, depth + 1)) return true;
      f.image[x].reset();
    }
    return false;
  };
  if (rec(rec, 0)) result.retraction = f;
  return result;
}

inline RetractionResult retraction_search(const DiGraph& host, const std::vector<Vertex>& sub) {
  return retraction_search(host, sub, distance_matrix(host));
}

/// `sub` is matched into `host` by vertex names; its arcs must agree with
/// the host's induced arcs.
inline RetractionResult retraction_search(const DiGraph& host, const DiGraph& sub) {
  VertexMap inc = inclusion_by_name(sub, host);
  std::vector<Vertex> vs;
  for (Vertex v = 0; v < sub.size(); ++v) vs.push_back(inc(v));
  DiGraph induced = host.induced(vs);
  for (Vertex a = 0; a < sub.size(); ++a)
    for (Vertex b = 0; b < sub.size(); ++b)
      if (sub.has_arc(a, b) != induced.has_arc(a, b))
        throw input_error("retraction_search: arcs of the subgraph differ from the host between " + sub.name(a) +
                          " and " + sub.name(b));
  return retraction_search(host, vs);
}

}  // namespace zigzag
