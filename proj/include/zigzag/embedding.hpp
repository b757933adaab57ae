#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "zigzag/digraph.hpp"
#include "zigzag/metric.hpp"
#include "zigzag/retract.hpp"

namespace zigzag {

/// One coordinate of an embedding into a product of oriented zigzags: the
/// zigzag Z_word and the position of every source vertex in it.
struct ZigzagFactor {
  Word word;
  std::vector<std::size_t> position;
  std::string origin;

  friend bool operator==(const ZigzagFactor& a, const ZigzagFactor& b) {
    return a.word == b.word && a.position == b.position;
  }
};

/// Word read along Z_w from position i to position j.
inline Word segment_word(const Word& w, std::size_t i, std::size_t j) {
  return i <= j ? w.substr(i, j - i) : involute(w.substr(j, i - j));
}

struct EmbeddingCertificate {
  std::vector<ZigzagFactor> factors;
  bool isometric = false;
  /// Set when some pair lies in different components: isometry for those
  /// pairs is only verified against words of at most this length.
  std::optional<std::size_t> disconnected_bound;
  /// First ordered pair whose distance the product does not reproduce.
  std::optional<Arc> failure;

  std::vector<std::size_t> tuple(Vertex v) const {
    std::vector<std::size_t> t;
    for (const auto& f : factors) t.push_back(f.position.at(v));
    return t;
  }
};

/// Checks that every coordinate is a homomorphism onto its zigzag and that
/// the join of the factor distances equals the source distance for every
/// pair. Returns the first offending pair.
inline std::optional<Arc> verify_embedding(const DiGraph& g, const DistanceMatrix& d,
                                           const std::vector<ZigzagFactor>& factors,
                                           std::optional<std::size_t> disconnected_bound) {
  for (const auto& f : factors) {
    if (f.position.size() != g.size()) throw std::logic_error("factor map has wrong arity");
    for (auto [x, y] : g.arcs()) {
      std::size_t a = f.position[x], b = f.position[y];
      if (a == b) continue;
      bool arc = (b == a + 1 && f.word[a] == Letter::plus) || (a == b + 1 && f.word[b] == Letter::minus);
      if (!arc) return Arc{x, y};
    }
  }
  const std::vector<Word> probes = disconnected_bound ? words_up_to(*disconnected_bound) : std::vector<Word>{};
  for (Vertex x = 0; x < g.size(); ++x)
    for (Vertex y = 0; y < g.size(); ++y) {
      if (x == y) continue;
      std::vector<Word> segs;
      for (const auto& f : factors) segs.push_back(segment_word(f.word, f.position[x], f.position[y]));
      if (d(x, y).is_top()) {
        if (!disconnected_bound) return Arc{x, y};
        for (const auto& v : probes) {
          bool excluded = std::any_of(segs.begin(), segs.end(), [&](const Word& s) { return !subword_leq(s, v); });
          if (!excluded) return Arc{x, y};
        }
        continue;
      }
      // Only the subword-maximal segments constrain the intersection.
      std::sort(segs.begin(), segs.end());
      segs.erase(std::unique(segs.begin(), segs.end()), segs.end());
      UpSet acc = UpSet::zero();
      for (std::size_t i = segs.size(); i-- > 0;) {
        bool below_other = false;
        for (std::size_t j = i + 1; j < segs.size() && !below_other; ++j) below_other = subword_leq(segs[i], segs[j]);
        if (!below_other) acc = join(acc, UpSet::principal(segs[i]));
      }
      if (acc != d(x, y)) return Arc{x, y};
    }
  return std::nullopt;
}

namespace detail {

inline std::optional<ZigzagFactor> factor_through(const DistanceMatrix& d, const Word& u, Vertex x, Vertex y,
                                                  std::string origin) {
  DiGraph z = zigzag_of_word(u);
  DistanceMatrix dz = distance_matrix(z);
  VertexMap f(d.size(), z.size());
  f.set(x, 0);
  f.set(y, u.length());
  auto full = extend_greedily(d, dz, f);
  if (!full) return std::nullopt;
  ZigzagFactor out{u, {}, std::move(origin)};
  for (Vertex v = 0; v < d.size(); ++v) out.position.push_back((*full)(v));
  return out;
}

inline void add_unique(std::vector<ZigzagFactor>& fs, ZigzagFactor f) {
  if (std::find(fs.begin(), fs.end(), f) == fs.end()) fs.push_back(std::move(f));
}

}  // namespace detail

/// Embedding into a product of zigzags: for each ordered pair (x, y) and each
/// maximal word u below d(x, y), the map x -> 0, y -> |u| extended greedily to
/// all of G inside Z_u. Pairs in different components get the two factors
/// Z_{+^bound} and Z_{-^bound}, which exclude every word of length <= bound.
/// Isometric exactly when all distances are MacNeille-closed.
inline EmbeddingCertificate embed_zigzag_product(const DiGraph& g, std::size_t bound) {
  EmbeddingCertificate cert;
  DistanceMatrix d = distance_matrix(g);
  for (Vertex x = 0; x < g.size(); ++x)
    for (Vertex y = 0; y < g.size(); ++y) {
      if (x == y || d(x, y).is_top()) continue;
      for (const auto& u : lower_cone(d(x, y)).maximal) {
        if (u.empty()) continue;
        auto f = detail::factor_through(d, u, x, y, g.name(x) + "," + g.name(y));
        // Zigzags have the extension property, so the greedy extension of a
        // non-expansive two-point map cannot get stuck.
        if (!f) throw std::logic_error("greedy extension into a zigzag failed");
        detail::add_unique(cert.factors, std::move(*f));
      }
    }
  auto comp = components(g);
  std::size_t ncomp = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  if (ncomp > 1) {
    if (bound == 0) throw input_error("embedding a disconnected graph needs a positive word-length bound");
    cert.disconnected_bound = bound;
    std::vector<Vertex> rep(ncomp, g.size());
    for (Vertex v = g.size(); v-- > 0;) rep[comp[v]] = v;
    for (std::size_t a = 0; a < ncomp; ++a)
      for (std::size_t b = a + 1; b < ncomp; ++b)
        for (Letter l : kLetters) {
          Word u;
          for (std::size_t i = 0; i < bound; ++i) u.push_back(l);
          auto f = detail::factor_through(d, u, rep[a], rep[b], g.name(rep[a]) + "|" + g.name(rep[b]));
          if (!f) throw std::logic_error("greedy extension into a zigzag failed");
          detail::add_unique(cert.factors, std::move(*f));
        }
  }
  cert.failure = verify_embedding(g, d, cert.factors, cert.disconnected_bound);
  cert.isometric = !cert.failure;
  return cert;
}

namespace detail {

/// All homomorphisms of a connected graph onto Z_w (image reaching both
/// ends), as position vectors.
inline std::vector<std::vector<std::size_t>> homomorphisms_onto_zigzag(const DiGraph& g, const Word& w) {
  std::vector<std::vector<std::size_t>> out;
  const std::size_t len = w.length();
  std::vector<bool> fixed(g.size(), false);
  std::vector<Vertex> order;
  if (g.size() == 0) return out;
  fixed[0] = true;
  order.push_back(0);
  for (Vertex v : search_order(g, fixed)) order.push_back(v);
  std::vector<std::size_t> pos(g.size());
  std::vector<bool> placed(g.size(), false);
  auto compatible = [&](std::size_t a, std::size_t b) {
    return a == b || (b == a + 1 && w[a] == Letter::plus) || (a == b + 1 && w[b] == Letter::minus);
  };
  auto rec = [&](auto&& self, std::size_t depth) -> void {
    if (depth == order.size()) {
      bool lo = false, hi = false;
      for (auto p : pos) lo |= p == 0, hi |= p == len;
      if (lo && hi) out.push_back(pos);
      return;
    }
    Vertex v = order[depth];
    for (std::size_t p = 0; p <= len; ++p) {
      bool ok = true;
      for (Vertex t : g.out(v))
        if (placed[t] && !compatible(p, pos[t])) ok = false;
      for (Vertex s : g.in(v))
        if (placed[s] && !compatible(pos[s], p)) ok = false;
      if (!ok) continue;
      pos[v] = p;
      placed[v] = true;
      self(self, depth + 1);
      placed[v] = false;
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace detail

/// Embedding of a connected graph with the fewest zigzag factors.
///
/// Every factor of an isometric embedding may be cut down to its image, a
/// zigzag Z_w with |w| < |V| onto which G maps. Since finitely generated
/// initial segments are closed, the product reproduces a closed distance
/// d(x, y) exactly when each maximal word of its lower cone appears as the
/// segment between x and y in some factor. This turns the search into an
/// exact set cover over all such homomorphisms. The chosen factors are then
/// verified independently with `verify_embedding`.
inline EmbeddingCertificate minimum_zigzag_embedding(const DiGraph& g, std::size_t max_factors = 8) {
  if (!is_connected(g)) throw input_error("minimum zigzag embedding needs a connected graph");
  EmbeddingCertificate cert;
  DistanceMatrix d = distance_matrix(g);
  struct Target {
    Vertex x, y;
    Word m;
  };
  std::vector<Target> targets;
  for (Vertex x = 0; x < g.size(); ++x)
    for (Vertex y = x + 1; y < g.size(); ++y) {
      if (!is_macneille_closed(d(x, y))) {
        cert.failure = Arc{x, y};
        return cert;
      }
      for (const auto& m : lower_cone(d(x, y)).maximal) targets.push_back({x, y, m});
    }
  if (targets.empty()) {
    cert.isometric = !verify_embedding(g, d, {}, std::nullopt);
    return cert;
  }

  struct Candidate {
    ZigzagFactor factor;
    std::vector<bool> covers;
  };
  std::vector<Candidate> cands;
  for (std::size_t len = 1; len < g.size(); ++len)
    for (const auto& w : words_of_length(len))
      for (auto& pos : detail::homomorphisms_onto_zigzag(g, w)) {
        std::vector<bool> covers(targets.size());
        bool any = false;
        for (std::size_t t = 0; t < targets.size(); ++t) {
          covers[t] = segment_word(w, pos[targets[t].x], pos[targets[t].y]) == targets[t].m;
          any |= covers[t];
        }
        if (any) cands.push_back({{w, std::move(pos), "minimum"}, std::move(covers)});
      }
  // Drop candidates whose coverage is contained in an earlier or strictly larger one.
  auto subsumes = [](const std::vector<bool>& a, const std::vector<bool>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (b[i] && !a[i]) return false;
    return true;
  };
  std::vector<std::size_t> undominated;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < cands.size() && !dominated; ++j) {
      if (i == j || !subsumes(cands[j].covers, cands[i].covers)) continue;
      dominated = !subsumes(cands[i].covers, cands[j].covers) || j < i;
    }
    if (!dominated) undominated.push_back(i);
  }
  std::vector<Candidate> kept;
  for (std::size_t i : undominated) kept.push_back(std::move(cands[i]));

  std::vector<std::size_t> chosen;
  std::vector<int> covered(targets.size(), 0);
  auto rec = [&](auto&& self, std::size_t budget) -> bool {
    auto it = std::find(covered.begin(), covered.end(), 0);
    if (it == covered.end()) return true;
    if (budget == 0) return false;
    std::size_t t = static_cast<std::size_t>(it - covered.begin());
    for (std::size_t c = 0; c < kept.size(); ++c) {
      if (!kept[c].covers[t]) continue;
      chosen.push_back(c);
      for (std::size_t i = 0; i < targets.size(); ++i) covered[i] += kept[c].covers[i];
      if (self(self, budget - 1)) return true;
      for (std::size_t i = 0; i < targets.size(); ++i) covered[i] -= kept[c].covers[i];
      chosen.pop_back();
    }
    return false;
  };
  for (std::size_t k = 1; k <= max_factors; ++k) {
    if (rec(rec, k)) {
      for (std::size_t c : chosen) cert.factors.push_back(kept[c].factor);
      cert.failure = verify_embedding(g, d, cert.factors, std::nullopt);
      cert.isometric = !cert.failure;
      return cert;
    }
  }
  auto it = std::find(covered.begin(), covered.end(), 0);
  const auto& t = targets[static_cast<std::size_t>(it - covered.begin())];
  cert.failure = Arc{t.x, t.y};
  return cert;
}

}  // namespace zigzag
