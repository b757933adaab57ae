#pragma once

#include <algorithm>
#include <cstddef>
#include <istream>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zigzag/word.hpp"

namespace zigzag {

using Vertex = std::size_t;
using Arc = std::pair<Vertex, Vertex>;

/// Finite reflexive directed graph. Every vertex carries an implicit loop;
/// only arcs between distinct vertices are stored. Vertices are indexed
/// 0..size()-1 and carry unique names.
class DiGraph {
 public:
  DiGraph() = default;

  /// Vertices named "0", "1", ..., "n-1".
  explicit DiGraph(std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) add_vertex(std::to_string(i));
  }

  explicit DiGraph(const std::vector<std::string>& names) {
    for (const auto& s : names) add_vertex(s);
  }

  Vertex add_vertex(std::string name) {
    if (by_name_.count(name)) throw input_error("duplicate vertex name '" + name + "'");
    Vertex v = names_.size();
    by_name_.emplace(name, v);
    names_.push_back(std::move(name));
    for (auto& row : adj_) row.push_back(false);
    adj_.emplace_back(names_.size(), false);
    out_.emplace_back();
    in_.emplace_back();
    return v;
  }

  /// Adds x -> y. Loops are implicit and ignored; returns false when nothing
  /// was added.
  bool add_arc(Vertex x, Vertex y) {
    if (x >= size() || y >= size()) throw input_error("arc refers to unknown vertex");
    if (x == y || adj_[x][y]) return false;
    adj_[x][y] = true;
    out_[x].insert(std::upper_bound(out_[x].begin(), out_[x].end(), y), y);
    in_[y].insert(std::upper_bound(in_[y].begin(), in_[y].end(), x), x);
    return true;
  }

  std::size_t size() const noexcept { return names_.size(); }
  bool has_arc(Vertex x, Vertex y) const noexcept { return adj_[x][y]; }
  /// Arc or equal: the reflexive arc relation.
  bool adjacent_or_equal(Vertex x, Vertex y) const noexcept { return x == y || adj_[x][y]; }

  const std::vector<Vertex>& out(Vertex x) const noexcept { return out_[x]; }
  const std::vector<Vertex>& in(Vertex x) const noexcept { return in_[x]; }

  const std::string& name(Vertex v) const { return names_.at(v); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  std::optional<Vertex> find(std::string_view name) const {
    auto it = by_name_.find(std::string(name));
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
  }

  Vertex vertex(std::string_view name) const {
    if (auto v = find(name)) return *v;
    throw input_error("unknown vertex '" + std::string(name) + "'");
  }

  std::vector<Arc> arcs() const {
    std::vector<Arc> out;
    for (Vertex x = 0; x < size(); ++x)
      for (Vertex y : out_[x]) out.emplace_back(x, y);
    return out;
  }

  std::size_t arc_count() const {
    std::size_t n = 0;
    for (const auto& o : out_) n += o.size();
    return n;
  }

  /// Subgraph induced on `vs`, vertices renumbered in the given order.
  DiGraph induced(std::span<const Vertex> vs) const {
    DiGraph h;
    for (Vertex v : vs) h.add_vertex(names_.at(v));
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = 0; j < vs.size(); ++j)
        if (has_arc(vs[i], vs[j])) h.add_arc(i, j);
    return h;
  }

  friend bool operator==(const DiGraph& a, const DiGraph& b) {
    return a.names_ == b.names_ && a.adj_ == b.adj_;
  }

 private:
  std::vector<std::string> names_;
  std::map<std::string, Vertex, std::less<>> by_name_;
  std::vector<std::vector<bool>> adj_;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
};

/// No pair of vertices is joined in both directions.
inline bool is_oriented(const DiGraph& g) {
  for (Vertex x = 0; x < g.size(); ++x)
    for (Vertex y : g.out(x))
      if (g.has_arc(y, x)) return false;
  return true;
}

/// No directed cycle through two or more distinct vertices.
inline bool is_acyclic(const DiGraph& g) {
  std::vector<std::size_t> indegree(g.size());
  for (Vertex v = 0; v < g.size(); ++v) indegree[v] = g.in(v).size();
  std::vector<Vertex> ready;
  for (Vertex v = 0; v < g.size(); ++v)
    if (indegree[v] == 0) ready.push_back(v);
  std::size_t removed = 0;
  while (!ready.empty()) {
    Vertex v = ready.back();
    ready.pop_back();
    ++removed;
    for (Vertex w : g.out(v))
      if (--indegree[w] == 0) ready.push_back(w);
  }
  return removed == g.size();
}

/// Connected components of the symmetric hull; component ids in order of
/// their smallest vertex.
inline std::vector<std::size_t> components(const DiGraph& g) {
  constexpr auto unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> comp(g.size(), unset);
  std::size_t next = 0;
  for (Vertex s = 0; s < g.size(); ++s) {
    if (comp[s] != unset) continue;
    std::vector<Vertex> stack{s};
    comp[s] = next;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (const auto* nbrs : {&g.out(v), &g.in(v)})
        for (Vertex w : *nbrs)
          if (comp[w] == unset) {
            comp[w] = next;
            stack.push_back(w);
          }
    }
    ++next;
  }
  return comp;
}

inline bool is_connected(const DiGraph& g) {
  auto comp = components(g);
  return std::all_of(comp.begin(), comp.end(), [](std::size_t c) { return c == 0; });
}

/// The oriented zigzag coded by u: vertices 0..|u|, arc i -> i+1 for '+',
/// i+1 -> i for '-'.
inline DiGraph zigzag_of_word(const Word& u) {
  DiGraph g(u.length() + 1);
  for (std::size_t i = 0; i < u.length(); ++i) {
    if (u[i] == Letter::plus)
      g.add_arc(i, i + 1);
    else
      g.add_arc(i + 1, i);
  }
  return g;
}

/// Index of a product vertex from its coordinates (first factor most significant).
inline Vertex product_index(std::span<const DiGraph> gs, std::span<const Vertex> coords) {
  Vertex idx = 0;
  for (std::size_t i = 0; i < gs.size(); ++i) idx = idx * gs[i].size() + coords[i];
  return idx;
}

inline std::vector<Vertex> product_coordinates(std::span<const DiGraph> gs, Vertex idx) {
  std::vector<Vertex> coords(gs.size());
  for (std::size_t i = gs.size(); i-- > 0;) {
    coords[i] = idx % gs[i].size();
    idx /= gs[i].size();
  }
  return coords;
}

/// Direct product of reflexive graphs: distinct tuples are joined when every
/// coordinate pair is an arc or equal. Vertex names are "(a,b,...)".
inline DiGraph product_graph(std::span<const DiGraph> gs) {
  if (gs.empty()) throw input_error("product of an empty list of graphs");
  std::size_t total = 1;
  for (const auto& g : gs) total *= g.size();
  DiGraph p;
  std::vector<std::vector<Vertex>> coords(total);
  for (Vertex v = 0; v < total; ++v) {
    coords[v] = product_coordinates(gs, v);
    std::string name = "(";
    for (std::size_t i = 0; i < gs.size(); ++i) name += (i ? "," : "") + gs[i].name(coords[v][i]);
    p.add_vertex(name + ")");
  }
  for (Vertex a = 0; a < total; ++a)
    for (Vertex b = 0; b < total; ++b) {
      if (a == b) continue;
      bool ok = true;
      for (std::size_t i = 0; i < gs.size() && ok; ++i) ok = gs[i].adjacent_or_equal(coords[a][i], coords[b][i]);
      if (ok) p.add_arc(a, b);
    }
  return p;
}

struct ParsedGraph {
  DiGraph graph;
  std::vector<std::string> warnings;
};

/// Reads the ".dg" text format: one arc "x y" per line, '#' starts a comment,
/// and an optional "vertices: a b c" line declares (isolated) vertices.
/// Vertices are numbered in order of first appearance.
inline ParsedGraph parse_dg(std::istream& in, std::string_view source = "<input>") {
  ParsedGraph out;
  auto vertex = [&](const std::string& name) {
    if (auto v = out.graph.find(name)) return *v;
    return out.graph.add_vertex(name);
  };
  auto where = [&](std::size_t line) { return std::string(source) + ":" + std::to_string(line) + ": "; };
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::vector<std::string> words;
    for (std::string t; tokens >> t;) words.push_back(t);
    if (words.empty()) continue;
    if (words.front() == "vertices:" || words.front().rfind("vertices:", 0) == 0) {
      std::string first = words.front().substr(9);
      if (!first.empty()) vertex(first);
      for (std::size_t i = 1; i < words.size(); ++i) vertex(words[i]);
      continue;
    }
    if (words.size() != 2)
      throw input_error(where(lineno) + "expected \"x y\" (one arc per line), got " +
                        std::to_string(words.size()) + " token(s)");
    Vertex x = vertex(words[0]);
    Vertex y = vertex(words[1]);
    if (x == y) {
      out.warnings.push_back(where(lineno) + "loop " + words[0] + " -> " + words[0] + " ignored (loops are implicit)");
      continue;
    }
    out.graph.add_arc(x, y);
  }
  return out;
}

inline ParsedGraph parse_dg(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_dg(in);
}

/// Writes the ".dg" format; isolated vertices go in a "vertices:" header.
inline std::string to_dg(const DiGraph& g) {
  std::string s = "vertices:";
  for (const auto& n : g.names()) s += " " + n;
  s += "\n";
  for (auto [x, y] : g.arcs()) s += g.name(x) + " " + g.name(y) + "\n";
  return s;
}

}  // namespace zigzag
