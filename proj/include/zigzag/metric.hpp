#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "zigzag/automaton.hpp"
#include "zigzag/digraph.hpp"
#include "zigzag/upset.hpp"

namespace zigzag {

/// Values of a generalized metric on a finite set of named points, stored
/// row-major.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::vector<std::string> names)
      : names_(std::move(names)), values_(names_.size() * names_.size()) {}

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  const UpSet& operator()(Vertex x, Vertex y) const { return values_.at(x * size() + y); }
  UpSet& at(Vertex x, Vertex y) { return values_.at(x * size() + y); }

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<UpSet> values_;
};

/// States are the vertices. Reading '+' follows an arc forwards, '-' follows
/// one backwards, and every vertex may stay put.
inline SubwordNFA zigzag_nfa(const DiGraph& g) {
  std::vector<Move> moves;
  for (auto [x, y] : g.arcs()) {
    moves.push_back({x, Letter::plus, y});
    moves.push_back({y, Letter::minus, x});
  }
  return SubwordNFA(g.size(), moves, {}, {});
}

inline SubwordNFA zigzag_nfa(const DiGraph& g, Vertex x, Vertex y) {
  if (x >= g.size() || y >= g.size()) throw input_error("zigzag automaton endpoint out of range");
  return zigzag_nfa(g).with_ends({x}, {y});
}

/// Zigzag distance: the words coding walks from x to y. TOP when x and y lie
/// in different components.
inline UpSet distance(const DiGraph& g, Vertex x, Vertex y) { return min_words(zigzag_nfa(g, x, y)); }

/// All pairwise distances; one relaxation per target vertex yields a column.
inline DistanceMatrix distance_matrix(const DiGraph& g) {
  DistanceMatrix m(g.names());
  SubwordNFA base = zigzag_nfa(g);
  for (Vertex y = 0; y < g.size(); ++y) {
    auto column = min_words_from(base.with_ends({}, {y}));
    for (Vertex x = 0; x < g.size(); ++x) m.at(x, y) = std::move(column[x]);
  }
  return m;
}

struct MetricViolation {
  enum class Kind { separation, triangle, involution };
  Kind kind;
  Vertex x, y, z;  // z is only meaningful for triangle violations
};

inline std::string to_string(MetricViolation::Kind k) {
  switch (k) {
    case MetricViolation::Kind::separation: return "separation";
    case MetricViolation::Kind::triangle: return "triangle";
    case MetricViolation::Kind::involution: return "involution";
  }
  return "?";
}

/// Checks d(x,y) = ZERO iff x = y, d(x,y) <= d(x,z) (+) d(z,y), and
/// d(x,y) = involute(d(y,x)). Every violation is listed.
inline std::vector<MetricViolation> verify_metric_axioms(const DistanceMatrix& m) {
  std::vector<MetricViolation> out;
  const std::size_t n = m.size();
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = 0; y < n; ++y) {
      if (m(x, y).is_zero() != (x == y)) out.push_back({MetricViolation::Kind::separation, x, y, 0});
      if (m(x, y) != involute(m(y, x))) out.push_back({MetricViolation::Kind::involution, x, y, 0});
      for (Vertex z = 0; z < n; ++z)
        if (!upset_leq(m(x, y), oplus(m(x, z), m(z, y)))) out.push_back({MetricViolation::Kind::triangle, x, y, z});
    }
  return out;
}

struct DecompositionReport {
  struct Violation {
    Vertex x, y;
    Word prefix, suffix;
  };
  std::size_t words_checked = 0;
  std::size_t splits_checked = 0;
  std::vector<Violation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

/// For every w = uv in d(x,y) with |w| <= max_length, looks for z with u in
/// d(x,z) and v in d(z,y).
inline DecompositionReport decomposition_check(const DistanceMatrix& m, std::size_t max_length) {
  DecompositionReport r;
  const auto words = words_up_to(max_length);
  for (Vertex x = 0; x < m.size(); ++x)
    for (Vertex y = 0; y < m.size(); ++y)
      for (const auto& w : words) {
        if (!m(x, y).contains(w)) continue;
        ++r.words_checked;
        for (std::size_t cut = 0; cut <= w.length(); ++cut) {
          ++r.splits_checked;
          Word u = w.substr(0, cut), v = w.substr(cut);
          bool found = false;
          for (Vertex z = 0; z < m.size() && !found; ++z) found = m(x, z).contains(u) && m(z, y).contains(v);
          if (!found) r.violations.push_back({x, y, std::move(u), std::move(v)});
        }
      }
  return r;
}

/// Arcs exactly where the one-letter word + belongs to the distance.
inline DiGraph graph_from_metric(const DistanceMatrix& m) {
  DiGraph g(m.names());
  const Word plus{Letter::plus};
  for (Vertex x = 0; x < m.size(); ++x)
    for (Vertex y = 0; y < m.size(); ++y)
      if (x != y && m(x, y).contains(plus)) g.add_arc(x, y);
  return g;
}

/// Ball of principal radius r around x: the vertices reached from x reading r.
inline std::vector<Vertex> ball(const DiGraph& g, Vertex x, const Word& r) {
  if (x >= g.size()) throw input_error("ball center out of range");
  return subset_reach(zigzag_nfa(g), {x}, r);
}

}  // namespace zigzag
