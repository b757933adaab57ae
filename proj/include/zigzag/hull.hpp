#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "zigzag/absolute_retract.hpp"
#include "zigzag/digraph.hpp"
#include "zigzag/embedding.hpp"
#include "zigzag/gadgets.hpp"
#include "zigzag/metric.hpp"

namespace zigzag {

struct HullResult {
  enum class Status { found, exhausted, not_embeddable, universe_too_large };
  Status status = Status::exhausted;
  /// G's vertices first (same names and order), then the added ones.
  std::optional<DiGraph> hull;
  std::vector<std::string> added;
  /// Minimum-factor embeddings used as search universes, one per component.
  std::vector<EmbeddingCertificate> embeddings;
  std::size_t candidates_tried = 0;
  std::string message;
};

inline std::string to_string(HullResult::Status s) {
  switch (s) {
    case HullResult::Status::found: return "found";
    case HullResult::Status::exhausted: return "exhausted";
    case HullResult::Status::not_embeddable: return "not-embeddable";
    case HullResult::Status::universe_too_large: return "universe-too-large";
  }
  return "?";
}

namespace detail {

struct ComponentHull {
  HullResult::Status status;
  EmbeddingCertificate embedding;
  std::vector<std::vector<std::size_t>> added;  // product coordinates of added vertices
  std::vector<Word> factor_words;
  std::size_t tried = 0;
  std::string message;
};

/// Breadth-first over subsets of the product universe for a connected graph.
inline ComponentHull component_hull(const DiGraph& g, std::size_t max_add, std::size_t max_universe) {
  ComponentHull out{HullResult::Status::exhausted, minimum_zigzag_embedding(g), {}, {}, 0, {}};
  if (!out.embedding.isometric) {
    out.status = HullResult::Status::not_embeddable;
    out.message = "no isometric embedding into a product of oriented zigzags";
    return out;
  }
  std::vector<DiGraph> zs;
  std::size_t total = 1;
  for (const auto& f : out.embedding.factors) {
    out.factor_words.push_back(f.word);
    zs.push_back(zigzag_of_word(f.word));
    total *= zs.back().size();
    if (total > max_universe) {
      out.status = HullResult::Status::universe_too_large;
      out.message = "product universe exceeds " + std::to_string(max_universe) + " vertices";
      return out;
    }
  }
  const DistanceMatrix d = distance_matrix(g);
  std::vector<Vertex> image;
  std::vector<bool> used(total, false);
  for (Vertex v = 0; v < g.size(); ++v) {
    auto t = out.embedding.tuple(v);
    Vertex idx = zs.empty() ? 0 : product_index(zs, std::vector<Vertex>(t.begin(), t.end()));
    image.push_back(idx);
    used[idx] = true;
  }
  std::vector<Vertex> extra;
  for (Vertex p = 0; p < total; ++p)
    if (!used[p]) extra.push_back(p);

  auto coords = [&](Vertex p) { return zs.empty() ? std::vector<Vertex>{} : product_coordinates(zs, p); };
  auto build = [&](const std::vector<Vertex>& chosen) {
    DiGraph h = g;
    std::vector<Vertex> all = image;
    for (Vertex p : chosen) {
      all.push_back(p);
      h.add_vertex(fresh_name(h, "#" + std::to_string(p)));
    }
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = 0; j < all.size(); ++j) {
        if (i == j || (i < g.size() && j < g.size())) continue;
        auto a = coords(all[i]), b = coords(all[j]);
        bool ok = true;
        for (std::size_t f = 0; f < zs.size() && ok; ++f) ok = zs[f].adjacent_or_equal(a[f], b[f]);
        if (ok) h.add_arc(i, j);
      }
    return h;
  };

  for (std::size_t k = 0; k <= std::min(max_add, extra.size()); ++k) {
    std::vector<std::size_t> sel(k);
    for (std::size_t i = 0; i < k; ++i) sel[i] = i;
    while (true) {
      std::vector<Vertex> chosen;
      for (auto i : sel) chosen.push_back(extra[i]);
      ++out.tried;
      DiGraph h = build(chosen);
      DistanceMatrix dh = distance_matrix(h);
      bool isometric = true;
      for (Vertex x = 0; x < g.size() && isometric; ++x)
        for (Vertex y = 0; y < g.size() && isometric; ++y) isometric = dh(x, y) == d(x, y);
      if (isometric && balls_2helly(h).helly) {
        out.status = HullResult::Status::found;
        for (Vertex p : chosen) {
          auto c = coords(p);
          out.added.emplace_back(c.begin(), c.end());
        }
        return out;
      }
      // Next k-combination in lexicographic order.
      std::size_t i = k;
      while (i > 0 && sel[i - 1] == extra.size() - k + i - 1) --i;
      if (i == 0) break;
      ++sel[i - 1];
      for (std::size_t j = i; j < k; ++j) sel[j] = sel[j - 1] + 1;
    }
  }
  out.message = "no absolute retract found with at most " + std::to_string(max_add) + " added vertices";
  return out;
}

inline std::string tuple_name(const std::vector<std::size_t>& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s + ")";
}

}  // namespace detail

/// Smallest absolute retract extending G isometrically, searched inside the
/// product of a minimum zigzag embedding: subsets of added product vertices
/// by increasing size, in lexicographic order. Disconnected graphs are
/// handled per component. Added vertices are named by their product
/// coordinates, prefixed with the component index when there are several.
inline HullResult injective_hull_search(const DiGraph& g, std::size_t max_add, std::size_t max_universe = 4096) {
  HullResult r;
  auto comp = components(g);
  std::size_t ncomp = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<std::vector<Vertex>> members(ncomp);
  for (Vertex v = 0; v < g.size(); ++v) members[comp[v]].push_back(v);

  DiGraph hull = g;
  std::size_t budget = max_add;
  for (std::size_t c = 0; c < ncomp; ++c) {
    DiGraph part = g.induced(members[c]);
    auto ch = detail::component_hull(part, budget, max_universe);
    r.embeddings.push_back(ch.embedding);
    r.candidates_tried += ch.tried;
    if (ch.status != HullResult::Status::found) {
      r.status = ch.status;
      r.message = (ncomp > 1 ? "component " + std::to_string(c) + ": " : std::string()) + ch.message;
      return r;
    }
    budget -= ch.added.size();
    // Re-create the component's added vertices inside the full graph.
    std::vector<Vertex> local_to_global = members[c];
    std::vector<std::vector<std::size_t>> local_coords;
    for (Vertex i = 0; i < members[c].size(); ++i) {
      auto t = ch.embedding.tuple(i);
      local_coords.emplace_back(t.begin(), t.end());
    }
    for (const auto& a : ch.added) {
      std::string base = (ncomp > 1 ? "c" + std::to_string(c) + ":" : std::string()) + detail::tuple_name(a);
      Vertex nv = hull.add_vertex(detail::fresh_name(hull, base));
      r.added.push_back(hull.name(nv));
      local_to_global.push_back(nv);
      local_coords.push_back(a);
    }
    std::vector<DiGraph> zs;
    for (const auto& w : ch.factor_words) zs.push_back(zigzag_of_word(w));
    for (std::size_t i = members[c].size(); i < local_coords.size(); ++i)
      for (std::size_t j = 0; j < local_coords.size(); ++j) {
        if (i == j) continue;
        bool fwd = true, bwd = true;
        for (std::size_t f = 0; f < zs.size(); ++f) {
          fwd = fwd && zs[f].adjacent_or_equal(local_coords[i][f], local_coords[j][f]);
          bwd = bwd && zs[f].adjacent_or_equal(local_coords[j][f], local_coords[i][f]);
        }
        if (fwd) hull.add_arc(local_to_global[i], local_to_global[j]);
        if (bwd) hull.add_arc(local_to_global[j], local_to_global[i]);
      }
  }
  r.status = HullResult::Status::found;
  r.hull = std::move(hull);
  return r;
}

}  // namespace zigzag
