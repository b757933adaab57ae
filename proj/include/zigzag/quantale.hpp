#pragma once

#include <vector>

#include "zigzag/automaton.hpp"
#include "zigzag/upset.hpp"

namespace zigzag {

/// Which side of the monoid product the residual occupies.
enum class Side {
  left,   ///< least r with v <= r (+) g
  right,  ///< least r with v <= g (+) r
};

namespace detail {

/// { w : every fixed word attached to w lands in target }, one tracker at a
/// time. Intersecting the single-tracker languages with `join` keeps the
/// automata linear in the target size instead of building the full product.
inline UpSet constrained_words(const std::vector<Word>& fixed, const UpSet& target, Attach side) {
  UpSet acc = UpSet::zero();
  for (const auto& p : fixed) {
    acc = join(acc, min_words(constraint_nfa({p}, target, side)));
    if (acc.is_top()) break;
  }
  return acc;
}

}  // namespace detail

/// Residuation. With the order reversed, the least r is the largest final
/// segment r with r g contained in v (resp. g r). Since v is up-closed it is
/// enough to test the generators of g.
inline UpSet residual(const UpSet& v, const UpSet& g, Side side) {
  return detail::constrained_words(g.generators(), v, side == Side::left ? Attach::after : Attach::before);
}

/// Least r with p <= q (+) involute(r) and q <= p (+) r, i.e. the words w with
/// p w contained in q and q involute(w) contained in p. The second condition
/// is rewritten as w involute(h) in involute(p) for each generator h of q.
inline UpSet quantale_distance(const UpSet& p, const UpSet& q) {
  UpSet forward = detail::constrained_words(p.generators(), q, Attach::before);
  if (forward.is_top()) return forward;
  std::vector<Word> back;
  for (const auto& h : q.generators()) back.push_back(involute(h));
  return join(forward, detail::constrained_words(back, involute(p), Attach::after));
}

/// Arc relation of the graph carried by the MacNeille completion: p -> q iff
/// the one-letter word + lies in the quantale distance.
inline bool quantale_graph_arc(const UpSet& p, const UpSet& q) {
  if (!is_macneille_closed(p)) throw input_error("quantale arc query on non-closed value " + to_string(p));
  if (!is_macneille_closed(q)) throw input_error("quantale arc query on non-closed value " + to_string(q));
  return quantale_distance(p, q).contains(Word{Letter::plus});
}

}  // namespace zigzag
