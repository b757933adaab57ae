#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zigzag/word.hpp"

namespace zigzag {

/// Minimal words of `ws` under the subword order, sorted canonically.
inline std::vector<Word> minimal_words(std::vector<Word> ws) {
  std::sort(ws.begin(), ws.end());
  ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
  std::vector<Word> kept;
  // A proper subword is strictly shorter, so it is already in `kept` if minimal.
  for (auto& w : ws) {
    bool dominated = std::any_of(kept.begin(), kept.end(),
                                 [&](const Word& g) { return subword_leq(g, w); });
    if (!dominated) kept.push_back(std::move(w));
  }
  return kept;
}

/// A final segment of the free monoid on {+, -} (closed under superwords),
/// stored as its antichain of subword-minimal generators.
///
/// The lattice order is reverse inclusion: ZERO (all words, generated by the
/// empty word) is least and TOP (the empty set, no generators) is greatest.
class UpSet {
 public:
  /// TOP.
  UpSet() = default;

  static UpSet top() { return UpSet{}; }
  static UpSet zero() { return principal(Word{}); }
  static UpSet principal(Word w) {
    UpSet u;
    u.generators_.push_back(std::move(w));
    return u;
  }

  /// Canonical form of the final segment generated by `ws`.
  static UpSet generated_by(std::vector<Word> ws) {
    UpSet u;
    u.generators_ = minimal_words(std::move(ws));
    return u;
  }

  const std::vector<Word>& generators() const noexcept { return generators_; }

  bool is_top() const noexcept { return generators_.empty(); }
  bool is_zero() const noexcept { return generators_.size() == 1 && generators_.front().empty(); }

  bool contains(const Word& w) const noexcept {
    return std::any_of(generators_.begin(), generators_.end(),
                       [&](const Word& g) { return subword_leq(g, w); });
  }

  std::size_t max_generator_length() const noexcept {
    std::size_t m = 0;
    for (const auto& g : generators_) m = std::max(m, g.length());
    return m;
  }

  friend bool operator==(const UpSet&, const UpSet&) = default;
  friend auto operator<=>(const UpSet& a, const UpSet& b) { return a.generators_ <=> b.generators_; }

 private:
  std::vector<Word> generators_;
};

inline UpSet canonical_upset(std::vector<Word> ws) { return UpSet::generated_by(std::move(ws)); }

inline bool upset_member(const Word& w, const UpSet& x) { return x.contains(w); }

/// x <= y in the quantale order, i.e. x contains y as a set.
inline bool upset_leq(const UpSet& x, const UpSet& y) {
  return std::all_of(y.generators().begin(), y.generators().end(),
                     [&](const Word& h) { return x.contains(h); });
}

/// Greatest lower bound: set union.
inline UpSet meet(const UpSet& x, const UpSet& y) {
  std::vector<Word> ws = x.generators();
  ws.insert(ws.end(), y.generators().begin(), y.generators().end());
  return canonical_upset(std::move(ws));
}

/// Minimal common supersequences of u and v.
///
/// Memoized over suffix pairs. A minimal common supersequence starts with a
/// letter consumed by the leftmost embedding of u or of v (or both when their
/// first letters agree), and its tail is minimal for the remaining suffixes.
inline std::vector<Word> mcs(const Word& u, const Word& v) {
  const std::size_t n = u.length(), m = v.length();
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Word>> memo;
  auto solve = [&](auto&& self, std::size_t i, std::size_t j) -> const std::vector<Word>& {
    auto key = std::make_pair(i, j);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::vector<Word> out;
    if (i == n) {
      out.push_back(v.substr(j));
    } else if (j == m) {
      out.push_back(u.substr(i));
    } else {
      auto extend = [&](Letter a, std::size_t ni, std::size_t nj) {
        for (const auto& tail : self(self, ni, nj)) out.push_back(a + tail);
      };
      if (u[i] == v[j]) {
        extend(u[i], i + 1, j + 1);
      } else {
        extend(u[i], i + 1, j);
        extend(v[j], i, j + 1);
      }
      out = minimal_words(std::move(out));
    }
    return memo.emplace(key, std::move(out)).first->second;
  };
  return solve(solve, 0, 0);
}

/// Least upper bound: set intersection.
inline UpSet join(const UpSet& x, const UpSet& y) {
  if (x.is_top() || y.is_top()) return UpSet::top();
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  std::vector<Word> ws;
  for (const auto& g : x.generators())
    for (const auto& h : y.generators()) {
      auto both = mcs(g, h);
      ws.insert(ws.end(), both.begin(), both.end());
    }
  return canonical_upset(std::move(ws));
}

/// The monoid operation: concatenation of final segments.
inline UpSet oplus(const UpSet& x, const UpSet& y) {
  std::vector<Word> ws;
  for (const auto& g : x.generators())
    for (const auto& h : y.generators()) ws.push_back(g + h);
  return canonical_upset(std::move(ws));
}

inline UpSet involute(const UpSet& x) {
  std::vector<Word> ws;
  for (const auto& g : x.generators()) ws.push_back(involute(g));
  return canonical_upset(std::move(ws));
}

/// A subword-closed set: either every word, or the down-closure of a finite
/// antichain of maximal words.
struct LowerCone {
  bool all = false;
  std::vector<Word> maximal;

  bool contains(const Word& w) const {
    return all || std::any_of(maximal.begin(), maximal.end(),
                              [&](const Word& m) { return subword_leq(w, m); });
  }

  friend bool operator==(const LowerCone&, const LowerCone&) = default;
};

/// Distinct subwords of w, in canonical order.
inline std::vector<Word> subwords_of(const Word& w) {
  std::vector<Word> layer{Word{}};
  // Build by prefix: subwords of w[0..i] are those of w[0..i-1] with or without w[i].
  for (std::size_t i = 0; i < w.length(); ++i) {
    std::vector<Word> next = layer;
    for (const auto& s : layer) {
      Word t = s;
      t.push_back(w[i]);
      next.push_back(std::move(t));
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    layer = std::move(next);
  }
  return layer;
}

/// Maximal common subwords of the generators; ALL for TOP.
inline LowerCone lower_cone(const UpSet& x) {
  if (x.is_top()) return {true, {}};
  const auto& gens = x.generators();
  // Generators are sorted by length, so the first one is a shortest.
  std::vector<Word> common;
  for (auto& s : subwords_of(gens.front()))
    if (std::all_of(gens.begin() + 1, gens.end(), [&](const Word& g) { return subword_leq(s, g); }))
      common.push_back(std::move(s));
  std::vector<Word> maximal;
  for (std::size_t i = common.size(); i-- > 0;) {
    const Word& s = common[i];
    bool dominated = std::any_of(maximal.begin(), maximal.end(),
                                 [&](const Word& m) { return subword_leq(s, m); });
    if (!dominated) maximal.push_back(s);
  }
  std::sort(maximal.begin(), maximal.end());
  return {false, std::move(maximal)};
}

/// Upper cone of the lower cone: the intersection of the principal final
/// segments over the maximal common subwords.
inline UpSet macneille_closure(const UpSet& x) {
  LowerCone cone = lower_cone(x);
  if (cone.all) return UpSet::top();
  UpSet acc = UpSet::zero();
  for (const auto& m : cone.maximal) acc = join(acc, UpSet::principal(m));
  return acc;
}

inline bool is_macneille_closed(const UpSet& x) { return macneille_closure(x) == x; }

inline std::size_t default_cancellation_bound(const UpSet& x) {
  return 2 * x.max_generator_length() + 2;
}

/// Searches u, v with |u|+|v| <= bound such that u+v and u-v lie in x but uv
/// does not. Pairs are visited by total length, then by u's length.
inline std::optional<std::pair<Word, Word>> cancellation_witness(const UpSet& x, std::size_t bound) {
  if (x.is_top()) return std::nullopt;
  for (std::size_t total = 0; total <= bound; ++total)
    for (std::size_t lu = 0; lu <= total; ++lu)
      for (const auto& u : words_of_length(lu))
        for (const auto& v : words_of_length(total - lu)) {
          if (!x.contains(u + Letter::plus + v) || !x.contains(u + Letter::minus + v)) continue;
          if (!x.contains(u + v)) return std::make_pair(u, v);
        }
  return std::nullopt;
}

/// "{+, --}"; TOP is "{}" and ZERO is "{e}".
inline std::string to_string(const UpSet& x) {
  std::string s = "{";
  for (std::size_t i = 0; i < x.generators().size(); ++i) {
    if (i) s += ", ";
    s += to_string(x.generators()[i]);
  }
  return s + "}";
}

inline std::vector<std::string> to_strings(const UpSet& x) {
  std::vector<std::string> out;
  for (const auto& g : x.generators()) out.push_back(to_string(g));
  return out;
}

/// Parses "{w1,w2,...}" (whitespace tolerated) into canonical form.
inline UpSet parse_upset(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.size() < 2 || text.front() != '{' || text.back() != '}')
    throw input_error("up-set literal must be enclosed in braces: \"" + std::string(text) + "\"");
  std::string_view body = trim(text.substr(1, text.size() - 2));
  std::vector<Word> ws;
  while (!body.empty()) {
    auto comma = body.find(',');
    ws.push_back(Word::parse(trim(body.substr(0, comma))));
    if (comma == std::string_view::npos) break;
    body = body.substr(comma + 1);
    if (trim(body).empty()) throw input_error("trailing comma in up-set literal");
  }
  return canonical_upset(std::move(ws));
}

}  // namespace zigzag
