#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>

#include "zigzag/digraph.hpp"
#include "zigzag/metric.hpp"
#include "zigzag/retract.hpp"

namespace zigzag {

namespace detail {

inline std::string fresh_name(const DiGraph& g, std::string base) {
  while (g.find(base)) base += "'";
  return base;
}

/// Lays the zigzag of u from `from` to a vertex it returns; intermediate
/// vertices are new. When `to` is given the walk ends there instead of at a
/// new vertex.
inline Vertex lay_zigzag(DiGraph& g, Vertex from, const Word& u, const std::string& stem,
                         std::optional<Vertex> to = std::nullopt) {
  Vertex cur = from;
  for (std::size_t i = 0; i < u.length(); ++i) {
    Vertex nxt = (to && i + 1 == u.length()) ? *to : g.add_vertex(fresh_name(g, stem + std::to_string(i + 1)));
    if (u[i] == Letter::plus)
      g.add_arc(cur, nxt);
    else
      g.add_arc(nxt, cur);
    cur = nxt;
  }
  return cur;
}

inline void require_isometric_extension(const DiGraph& g, const DiGraph& h, const char* what) {
  VertexMap inc = VertexMap::from_total([&] {
    std::vector<Vertex> id(g.size());
    for (Vertex v = 0; v < g.size(); ++v) id[v] = v;
    return id;
  }(), h.size());
  if (!is_isometric_embedding(inc, g, h)) throw std::logic_error(std::string(what) + ": result is not an isometric extension");
}

}  // namespace detail

/// Extension of G around a directed 3-cycle c0 -> c1 -> c2 -> c0: new sets
/// Y and Z of size k, a perfect matching z_i -> y_i, arcs y_i -> z_j for
/// i != j, arcs from the cycle into Y and from Z into the cycle. The first
/// |V(G)| vertices of the result are those of G.
inline DiGraph gadget_cycle_extension(const DiGraph& g, std::array<Vertex, 3> cycle, std::size_t k) {
  for (Vertex c : cycle)
    if (c >= g.size()) throw input_error("gadget_cycle_extension: cycle vertex out of range");
  auto [a, b, c] = cycle;
  bool forward = g.has_arc(a, b) && g.has_arc(b, c) && g.has_arc(c, a);
  bool backward = g.has_arc(b, a) && g.has_arc(c, b) && g.has_arc(a, c);
  if (a == b || b == c || a == c || !(forward || backward))
    throw input_error("gadget_cycle_extension: the given vertices do not form a directed 3-cycle");
  if (k <= g.size()) throw input_error("gadget_cycle_extension: k must exceed the number of vertices");
  DiGraph h = g;
  std::vector<Vertex> ys, zs;
  for (std::size_t i = 0; i < k; ++i) ys.push_back(h.add_vertex(detail::fresh_name(h, "y" + std::to_string(i))));
  for (std::size_t i = 0; i < k; ++i) zs.push_back(h.add_vertex(detail::fresh_name(h, "z" + std::to_string(i))));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j)
        h.add_arc(zs[i], ys[j]);
      else
        h.add_arc(ys[i], zs[j]);
    }
  for (Vertex v : cycle) {
    for (Vertex y : ys) h.add_arc(v, y);
    for (Vertex z : zs) h.add_arc(z, v);
  }
  detail::require_isometric_extension(g, h, "gadget_cycle_extension");
  return h;
}

inline std::size_t default_gadget_size(const DiGraph& g) { return g.size() + 1; }

/// Vertices added by `gadget_cancellation_extension`.
struct CancellationGadget {
  DiGraph graph;
  Vertex x_end;   ///< end of the zigzag of u (x itself when u is empty)
  Vertex z1, z2;  ///< the two new vertices of the 3-cycle through x_end
  Vertex y_start; ///< start of the zigzag of v' (y itself when v' is empty)
};

/// Given u+v and u-v in d(x, y) with v = a v', attaches a zigzag of u from
/// x to x', a directed 3-cycle x' -> z1 -> z2 -> x', arcs between z1, z2 and
/// y' oriented by the letter a, and a zigzag of v' from y' to y.
inline CancellationGadget gadget_cancellation_extension(const DiGraph& g, Vertex x, Vertex y, const Word& u,
                                                        const Word& v) {
  if (x >= g.size() || y >= g.size()) throw input_error("gadget_cancellation_extension: vertex out of range");
  if (x == y) throw input_error("gadget_cancellation_extension: x and y must differ");
  if (v.empty()) throw input_error("gadget_cancellation_extension: v must be nonempty");
  UpSet dxy = distance(g, x, y);
  if (!dxy.contains(u + Letter::plus + v) || !dxy.contains(u + Letter::minus + v))
    throw input_error("gadget_cancellation_extension: u+v and u-v must both lie in d(x, y)");
  CancellationGadget out{g, 0, 0, 0, 0};
  DiGraph& h = out.graph;
  out.x_end = detail::lay_zigzag(h, x, u, "l");
  out.z1 = h.add_vertex(detail::fresh_name(h, "z'"));
  out.z2 = h.add_vertex(detail::fresh_name(h, "z''"));
  h.add_arc(out.x_end, out.z1);
  h.add_arc(out.z1, out.z2);
  h.add_arc(out.z2, out.x_end);
  const Word tail = v.substr(1);
  out.y_start = tail.empty() ? y : h.add_vertex(detail::fresh_name(h, "y'"));
  for (Vertex z : {out.z1, out.z2}) {
    if (v[0] == Letter::plus)
      h.add_arc(z, out.y_start);
    else
      h.add_arc(out.y_start, z);
  }
  if (!tail.empty()) detail::lay_zigzag(h, out.y_start, tail, "m", y);
  detail::require_isometric_extension(g, h, "gadget_cancellation_extension");
  return out;
}

}  // namespace zigzag
