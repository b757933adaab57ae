#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "zigzag/upset.hpp"
#include "zigzag/word.hpp"

namespace zigzag {

using State = std::size_t;
/// Sorted, duplicate-free list of states.
using StateSet = std::vector<State>;

inline constexpr std::array<Letter, 2> kLetters{Letter::plus, Letter::minus};

inline constexpr std::size_t letter_index(Letter a) noexcept { return a == Letter::plus ? 0 : 1; }

struct Move {
  State from;
  Letter letter;
  State to;
};

/// Nondeterministic automaton over {+, -} in which every state carries a
/// self-loop on both letters. Its language is therefore closed under
/// superwords. Self-loops are added at construction.
class SubwordNFA {
 public:
  SubwordNFA() = default;

  SubwordNFA(std::size_t states, std::span<const Move> moves, StateSet starts, StateSet accepts)
      : starts_(normalize(std::move(starts))), accepts_(normalize(std::move(accepts))), accepting_(states, false) {
    for (auto& table : next_) table.assign(states, {});
    for (State s = 0; s < states; ++s)
      for (auto& table : next_) table[s].push_back(s);
    for (const auto& mv : moves) {
      if (mv.from >= states || mv.to >= states) throw input_error("automaton move refers to unknown state");
      next_[letter_index(mv.letter)][mv.from].push_back(mv.to);
    }
    for (auto& table : next_)
      for (auto& succ : table) succ = normalize(std::move(succ));
    for (State s : starts_)
      if (s >= states) throw input_error("automaton start state out of range");
    for (State s : accepts_) {
      if (s >= states) throw input_error("automaton accept state out of range");
      accepting_[s] = true;
    }
  }

  std::size_t size() const noexcept { return accepting_.size(); }
  const StateSet& starts() const noexcept { return starts_; }
  const StateSet& accepts() const noexcept { return accepts_; }
  bool is_accepting(State s) const noexcept { return accepting_[s]; }

  const StateSet& successors(State s, Letter a) const noexcept { return next_[letter_index(a)][s]; }

  bool satisfies_self_loop_law() const {
    for (State s = 0; s < size(); ++s)
      for (Letter a : kLetters)
        if (!std::binary_search(successors(s, a).begin(), successors(s, a).end(), s)) return false;
    return true;
  }

  /// Same transitions, different start and accept sets.
  SubwordNFA with_ends(StateSet starts, StateSet accepts) const {
    SubwordNFA copy = *this;
    copy.starts_ = normalize(std::move(starts));
    copy.accepts_ = normalize(std::move(accepts));
    copy.accepting_.assign(size(), false);
    for (State s : copy.accepts_) copy.accepting_.at(s) = true;
    return copy;
  }

 private:
  static StateSet normalize(StateSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
  }

  std::array<std::vector<StateSet>, 2> next_;
  StateSet starts_;
  StateSet accepts_;
  std::vector<bool> accepting_;
};

inline StateSet subset_reach(const SubwordNFA& a, const StateSet& from, const Word& w) {
  StateSet cur = from;
  for (std::size_t i = 0; i < w.length(); ++i) {
    StateSet nxt;
    for (State s : cur) {
      const auto& succ = a.successors(s, w[i]);
      nxt.insert(nxt.end(), succ.begin(), succ.end());
    }
    std::sort(nxt.begin(), nxt.end());
    nxt.erase(std::unique(nxt.begin(), nxt.end()), nxt.end());
    cur = std::move(nxt);
  }
  return cur;
}

inline bool nfa_accepts(const SubwordNFA& a, const Word& w) {
  auto reached = subset_reach(a, a.starts(), w);
  return std::any_of(reached.begin(), reached.end(), [&](State s) { return a.is_accepting(s); });
}

/// For every state, the antichain of minimal words leading from it to an
/// accepting state.
///
/// Synchronous relaxation over the quantale: round k accounts for every run
/// with at most k non-loop moves. A minimal word has a run that never revisits
/// a state (cutting a loop yields an accepted proper subword), so the values
/// stabilise after at most |states| - 1 productive rounds.
inline std::vector<UpSet> min_words_from(const SubwordNFA& a) {
  const std::size_t n = a.size();
  std::vector<UpSet> best(n);
  for (State s : a.accepts()) best[s] = UpSet::zero();
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<UpSet> next(n);
    for (State s = 0; s < n; ++s) {
      if (best[s].is_zero()) {
        next[s] = best[s];
        continue;
      }
      std::vector<Word> ws = best[s].generators();
      for (Letter l : kLetters)
        for (State t : a.successors(s, l)) {
          if (t == s) continue;
          for (const auto& g : best[t].generators()) ws.push_back(l + g);
        }
      next[s] = canonical_upset(std::move(ws));
      if (next[s] != best[s]) changed = true;
    }
    best = std::move(next);
  }
  return best;
}

/// Antichain of subword-minimal accepted words; TOP when nothing is accepted.
inline UpSet min_words(const SubwordNFA& a) {
  auto per_state = min_words_from(a);
  std::vector<Word> ws;
  for (State s : a.starts()) ws.insert(ws.end(), per_state[s].generators().begin(), per_state[s].generators().end());
  return canonical_upset(std::move(ws));
}

/// Breadth-first subset construction from `from`. Each reachable subset is
/// reported once, with the first (shortest, '+' before '-') word reaching it.
inline std::vector<std::pair<StateSet, Word>> all_reachable_sets(const SubwordNFA& a, const StateSet& from) {
  std::vector<std::pair<StateSet, Word>> out;
  std::map<StateSet, std::size_t> seen;
  StateSet start = from;
  std::sort(start.begin(), start.end());
  start.erase(std::unique(start.begin(), start.end()), start.end());
  seen.emplace(start, 0);
  out.emplace_back(start, Word{});
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (Letter l : kLetters) {
      StateSet nxt = subset_reach(a, out[head].first, Word{l});
      if (seen.count(nxt)) continue;
      Word w = out[head].second + l;
      seen.emplace(nxt, out.size());
      out.emplace_back(std::move(nxt), std::move(w));
    }
  }
  return out;
}

/// Where the fixed words sit relative to the unknown word w.
enum class Attach {
  before,  ///< p w
  after,   ///< w p
};

namespace detail {

/// What is left of t after greedily embedding as much of it as possible into
/// the fixed word p, on the side where p is attached.
inline Word residue(const Word& p, const Word& t, Attach side) {
  if (side == Attach::before) {
    std::size_t k = 0;
    for (std::size_t j = 0; j < p.length() && k < t.length(); ++j)
      if (p[j] == t[k]) ++k;
    return t.substr(k);
  }
  std::size_t k = 0;
  for (std::size_t j = p.length(); j-- > 0 && k < t.length();)
    if (p[j] == t[t.length() - 1 - k]) ++k;
  return t.substr(0, t.length() - k);
}

}  // namespace detail

/// Automaton for { w : for every fixed word p, pw (or wp) lies in target }.
///
/// One tracker per fixed word: a disjoint union of chains, one chain per
/// minimal residue of a target generator, each chain reading its residue as a
/// subsequence. The result is the reachable part of the product of trackers.
inline SubwordNFA constraint_nfa(const std::vector<Word>& fixed, const UpSet& target, Attach side) {
  std::vector<std::vector<Word>> chains;
  for (const auto& p : fixed) {
    std::vector<Word> rs;
    for (const auto& t : target.generators()) rs.push_back(detail::residue(p, t, side));
    chains.push_back(minimal_words(std::move(rs)));
    if (chains.back().empty()) return SubwordNFA(0, {}, {}, {});
  }
  const std::size_t k = chains.size();
  // Product state: for each tracker, (chain index, position in chain).
  using Tuple = std::vector<std::uint32_t>;
  std::map<Tuple, State> index;
  std::vector<Tuple> tuples;
  auto intern = [&](const Tuple& t) {
    auto [it, fresh] = index.emplace(t, tuples.size());
    if (fresh) tuples.push_back(t);
    return it->second;
  };

  StateSet starts;
  {
    Tuple t(2 * k, 0);
    auto rec = [&](auto&& self, std::size_t i) -> void {
      if (i == k) {
        starts.push_back(intern(t));
        return;
      }
      for (std::uint32_t c = 0; c < chains[i].size(); ++c) {
        t[2 * i] = c;
        self(self, i + 1);
      }
    };
    rec(rec, 0);
  }

  std::vector<Move> moves;
  for (std::size_t head = 0; head < tuples.size(); ++head) {
    for (Letter l : kLetters) {
      const Tuple cur = tuples[head];
      Tuple t = cur;
      auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == k) {
          if (t != cur) moves.push_back({head, l, intern(t)});
          return;
        }
        self(self, i + 1);
        const Word& chain = chains[i][cur[2 * i]];
        const std::uint32_t pos = cur[2 * i + 1];
        if (pos < chain.length() && chain[pos] == l) {
          t[2 * i + 1] = pos + 1;
          self(self, i + 1);
          t[2 * i + 1] = pos;
        }
      };
      rec(rec, 0);
    }
  }

  StateSet accepts;
  for (State s = 0; s < tuples.size(); ++s) {
    bool done = true;
    for (std::size_t i = 0; i < k && done; ++i)
      done = tuples[s][2 * i + 1] == chains[i][tuples[s][2 * i]].length();
    if (done) accepts.push_back(s);
  }
  return SubwordNFA(tuples.size(), moves, std::move(starts), std::move(accepts));
}

}  // namespace zigzag
