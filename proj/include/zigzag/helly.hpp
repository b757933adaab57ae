#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <vector>

#include "zigzag/metric.hpp"

namespace zigzag {

using VertexSet = std::vector<Vertex>;  // sorted

struct HellyResult {
  bool helly = true;
  /// Three vertices for which the members containing two of them share nothing.
  std::array<Vertex, 3> triple{};
  /// Indices into the family of a pairwise-intersecting subfamily with empty
  /// intersection (inclusion-minimal).
  std::vector<std::size_t> witness;
};

namespace detail {

inline VertexSet intersect(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline bool has(const VertexSet& s, Vertex v) { return std::binary_search(s.begin(), s.end(), v); }

}  // namespace detail

/// Helly property of a set family (every pairwise-intersecting subfamily has
/// a common element), decided by Berge's triple criterion: for all vertices
/// a, b, c the members containing at least two of them intersect. Members
/// are assumed nonempty.
inline HellyResult berge_helly(const std::vector<VertexSet>& family) {
  HellyResult r;
  Vertex n = 0;
  for (const auto& s : family)
    if (!s.empty()) n = std::max(n, s.back() + 1);
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c) {
        std::vector<std::size_t> members;
        std::optional<VertexSet> common;
        for (std::size_t i = 0; i < family.size(); ++i) {
          const auto& s = family[i];
          int hits = detail::has(s, a) + detail::has(s, b) + detail::has(s, c);
          if (hits < 2) continue;
          members.push_back(i);
          common = common ? detail::intersect(*common, s) : s;
        }
        if (!common || !common->empty()) continue;
        // Shrink to an inclusion-minimal subfamily that still has empty
        // intersection; subfamilies of this one stay pairwise intersecting.
        for (std::size_t k = 0; k < members.size();) {
          std::optional<VertexSet> rest;
          for (std::size_t j = 0; j < members.size(); ++j)
            if (j != k) rest = rest ? detail::intersect(*rest, family[members[j]]) : family[members[j]];
          if (rest && rest->empty())
            members.erase(members.begin() + static_cast<std::ptrdiff_t>(k));
          else
            ++k;
        }
        r.helly = false;
        r.triple = {a, b, c};
        r.witness = std::move(members);
        return r;
      }
  return r;
}

struct BallRecord {
  Vertex center;
  Word radius;
  VertexSet members;
};

/// Every distinct ball B(x, ^r) with principal radius, i.e. every subset
/// reachable from a single vertex in the zigzag automaton. Each set is
/// recorded once with the first (center, radius) that produced it.
inline std::vector<BallRecord> enumerate_balls(const DiGraph& g) {
  SubwordNFA a = zigzag_nfa(g);
  std::vector<BallRecord> out;
  std::map<VertexSet, std::size_t> seen;
  for (Vertex x = 0; x < g.size(); ++x)
    for (auto& [set, word] : all_reachable_sets(a, {x}))
      if (seen.emplace(set, out.size()).second) out.push_back({x, word, set});
  return out;
}

struct BallHellyReport {
  bool helly = true;
  std::size_t ball_count = 0;
  std::array<Vertex, 3> triple{};
  std::vector<BallRecord> witness;
};

/// 2-Helly property of the family of balls with principal radii.
inline BallHellyReport balls_2helly(const DiGraph& g) {
  auto balls = enumerate_balls(g);
  std::vector<VertexSet> family;
  family.reserve(balls.size());
  for (const auto& b : balls) family.push_back(b.members);
  auto h = berge_helly(family);
  BallHellyReport r;
  r.helly = h.helly;
  r.ball_count = balls.size();
  r.triple = h.triple;
  for (std::size_t i : h.witness) r.witness.push_back(balls[i]);
  return r;
}

}  // namespace zigzag
