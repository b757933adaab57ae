#pragma once

// Brute-force reference implementations. They work on explicit finite word
// sets and explicit walks, never on antichains or automata, so agreement with
// the library is independent evidence.

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "zigzag/digraph.hpp"
#include "zigzag/upset.hpp"

namespace oracle {

using zigzag::DiGraph;
using zigzag::Letter;
using zigzag::UpSet;
using zigzag::Vertex;
using zigzag::Word;

/// u is a subsequence of v, by memoized recursion over both suffixes.
inline bool is_subsequence(const std::string& u, const std::string& v) {
  std::vector<std::vector<int>> memo(u.size() + 1, std::vector<int>(v.size() + 1, -1));
  std::function<bool(std::size_t, std::size_t)> go = [&](std::size_t i, std::size_t j) -> bool {
    if (i == u.size()) return true;
    if (j == v.size()) return false;
    int& m = memo[i][j];
    if (m < 0) m = (u[i] == v[j] && go(i + 1, j + 1)) || go(i, j + 1);
    return m;
  };
  return go(0, 0);
}

/// Every word over {+,-} of length <= n, as strings.
inline std::vector<std::string> all_strings(std::size_t n) {
  std::vector<std::string> out{""};
  for (std::size_t start = 0; start < out.size(); ++start) {
    if (out[start].size() == n) continue;
    out.push_back(out[start] + "+");
    out.push_back(out[start] + "-");
  }
  return out;
}

/// Membership in the final segment generated by `gens`, by definition.
inline bool member(const std::string& w, const std::vector<std::string>& gens) {
  return std::any_of(gens.begin(), gens.end(), [&](const std::string& g) { return is_subsequence(g, w); });
}

inline std::vector<std::string> gens_of(const UpSet& x) {
  std::vector<std::string> out;
  for (const auto& g : x.generators()) out.push_back(g.letters());
  return out;
}

/// Minimal elements of a finite word set under the subsequence order.
inline std::set<std::string> minimal(const std::set<std::string>& s) {
  std::set<std::string> out;
  for (const auto& w : s) {
    bool min = true;
    for (const auto& v : s)
      if (v != w && is_subsequence(v, w)) min = false;
    if (min) out.insert(w);
  }
  return out;
}

inline std::set<std::string> as_set(const UpSet& x) {
  auto g = gens_of(x);
  return {g.begin(), g.end()};
}

/// Minimal common supersequences, by enumerating all words up to |u|+|v|.
inline std::set<std::string> mcs(const std::string& u, const std::string& v) {
  std::set<std::string> common;
  for (const auto& w : all_strings(u.size() + v.size()))
    if (is_subsequence(u, w) && is_subsequence(v, w)) common.insert(w);
  return minimal(common);
}

/// Is there a walk from x to y reading w, one position at a time, where '+'
/// stays or follows an arc and '-' stays or follows an arc backwards?
inline bool walk_exists(const DiGraph& g, Vertex x, Vertex y, const std::string& w) {
  std::function<bool(Vertex, std::size_t)> go = [&](Vertex v, std::size_t i) -> bool {
    if (i == w.size()) return v == y;
    for (Vertex t = 0; t < g.size(); ++t) {
      bool step = t == v || (w[i] == '+' ? g.has_arc(v, t) : g.has_arc(t, v));
      if (step && go(t, i + 1)) return true;
    }
    return false;
  };
  return go(x, 0);
}

/// Minimal words of d(x, y) found among words of length <= n.
inline std::set<std::string> distance_generators(const DiGraph& g, Vertex x, Vertex y, std::size_t n) {
  std::set<std::string> words;
  for (const auto& w : all_strings(n))
    if (walk_exists(g, x, y, w)) words.insert(w);
  return minimal(words);
}

/// Cancellation rule checked over all words up to length n: u+v, u-v in X
/// imply uv in X.
inline bool cancellation_holds(const std::vector<std::string>& gens, std::size_t n) {
  for (const auto& w : all_strings(n))
    for (std::size_t cut = 0; cut <= w.size(); ++cut) {
      std::string u = w.substr(0, cut), v = w.substr(cut);
      if (member(u + "+" + v, gens) && member(u + "-" + v, gens) && !member(w, gens)) return false;
    }
  return true;
}

inline std::string involute(const std::string& w) {
  std::string out(w.rbegin(), w.rend());
  for (char& c : out) c = c == '+' ? '-' : '+';
  return out;
}

// ---- random generators ----------------------------------------------------

template <class Rng>
Word random_word(Rng& rng, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::bernoulli_distribution coin;
  Word w;
  for (std::size_t n = len(rng); n > 0; --n) w.push_back(coin(rng) ? Letter::plus : Letter::minus);
  return w;
}

/// Random final segment: TOP occasionally, otherwise one to three generators.
template <class Rng>
UpSet random_upset(Rng& rng, std::size_t max_len, bool allow_top = true) {
  std::uniform_int_distribution<int> kind(0, 19);
  if (allow_top && kind(rng) == 0) return UpSet::top();
  std::uniform_int_distribution<std::size_t> count(1, 3);
  std::vector<Word> ws;
  for (std::size_t n = count(rng); n > 0; --n) ws.push_back(random_word(rng, max_len));
  return UpSet::generated_by(std::move(ws));
}

/// Random directed graph (2-cycles allowed unless `oriented`).
template <class Rng>
DiGraph random_graph(Rng& rng, std::size_t n, double p, bool oriented = false) {
  std::bernoulli_distribution arc(p), coin;
  DiGraph g(n);
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) {
      if (oriented) {
        if (arc(rng)) coin(rng) ? g.add_arc(a, b) : g.add_arc(b, a);
        continue;
      }
      if (arc(rng)) g.add_arc(a, b);
      if (arc(rng)) g.add_arc(b, a);
    }
  return g;
}

}  // namespace oracle
