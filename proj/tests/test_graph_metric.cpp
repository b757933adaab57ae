#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "zigzag/consistency.hpp"
#include "zigzag/digraph.hpp"
#include "zigzag/metric.hpp"
#include "zigzag/quantale.hpp"

using namespace zigzag;

namespace {

Word W(const char* s) { return Word::parse(s); }
UpSet U(std::initializer_list<const char*> gens) {
  std::vector<Word> ws;
  for (auto g : gens) ws.push_back(W(g));
  return canonical_upset(std::move(ws));
}

DiGraph cycle(std::size_t n) {
  DiGraph g(n);
  for (Vertex i = 0; i < n; ++i) g.add_arc(i, (i + 1) % n);
  return g;
}

}  // namespace

// ---- graphs -----------------------------------------------------------------

TEST(DiGraph, LoopsAreNotStored) {
  DiGraph g(2);
  EXPECT_FALSE(g.add_arc(0, 0));
  EXPECT_TRUE(g.add_arc(0, 1));
  EXPECT_FALSE(g.add_arc(0, 1));
  EXPECT_EQ(g.arc_count(), 1u);
  EXPECT_TRUE(g.adjacent_or_equal(1, 1));
}

TEST(DiGraph, ParsesTextFormat) {
  auto p = parse_dg("# comment\nvertices: a b c z\na b # trailing\n\nb c\nc c\n");
  EXPECT_EQ(p.graph.size(), 4u);
  EXPECT_EQ(p.graph.arc_count(), 2u);
  EXPECT_TRUE(p.graph.has_arc(p.graph.vertex("a"), p.graph.vertex("b")));
  ASSERT_EQ(p.warnings.size(), 1u);
  EXPECT_NE(p.warnings[0].find(":6:"), std::string::npos);
  EXPECT_EQ(parse_dg(to_dg(p.graph)).graph, p.graph);
}

TEST(DiGraph, MalformedLinesCarryLineNumbers) {
  try {
    parse_dg("0 1\n1 2 3\n");
    FAIL() << "expected an input error";
  } catch (const input_error& e) {
    EXPECT_NE(std::string(e.what()).find(":2:"), std::string::npos) << e.what();
  }
  EXPECT_THROW(parse_dg("0\n"), input_error);
}

TEST(DiGraph, ZigzagOfWord) {
  auto z = zigzag_of_word(W("+"));
  EXPECT_EQ(z.size(), 2u);
  EXPECT_TRUE(z.has_arc(0, 1));
  EXPECT_EQ(zigzag_of_word(W("e")).size(), 1u);
  auto z8 = zigzag_of_word(W("+++--+--"));
  EXPECT_EQ(z8.size(), 9u);
  EXPECT_EQ(z8.arc_count(), 8u);
  EXPECT_TRUE(z8.has_arc(4, 3));
  EXPECT_TRUE(z8.has_arc(5, 4));
  EXPECT_TRUE(z8.has_arc(5, 6));
  EXPECT_TRUE(z8.has_arc(8, 7));
}

TEST(DiGraph, OrientationAndAcyclicity) {
  for (const auto& u : words_up_to(4)) {
    EXPECT_TRUE(is_oriented(zigzag_of_word(u)));
    EXPECT_TRUE(is_acyclic(zigzag_of_word(u)));
  }
  DiGraph two(2);
  two.add_arc(0, 1);
  two.add_arc(1, 0);
  EXPECT_FALSE(is_oriented(two));
  EXPECT_TRUE(is_oriented(cycle(3)));
  EXPECT_FALSE(is_acyclic(cycle(3)));
  DiGraph alt(4);
  alt.add_arc(0, 1);
  alt.add_arc(2, 1);
  alt.add_arc(2, 3);
  alt.add_arc(0, 3);
  EXPECT_TRUE(is_acyclic(alt));
}

// ---- distances --------------------------------------------------------------

TEST(Metric, ZigzagNfaSteps) {
  DiGraph p(2);
  p.add_arc(0, 1);
  EXPECT_EQ(subset_reach(zigzag_nfa(p), {0}, W("+")), (StateSet{0, 1}));
  EXPECT_EQ(subset_reach(zigzag_nfa(cycle(3)), {0}, W("-")), (StateSet{0, 2}));
}

TEST(Metric, DistanceExamples) {
  for (const auto& u : words_up_to(5)) EXPECT_EQ(distance(zigzag_of_word(u), 0, u.length()), UpSet::principal(u));
  EXPECT_EQ(distance(cycle(3), 1, 1), UpSet::zero());
  EXPECT_EQ(distance(cycle(3), 0, 1), U({"+", "--"}));
}

TEST(Metric, NfaLanguageIsTheDistance) {
  std::mt19937 rng(1);
  for (int t = 0; t < 30; ++t) {
    DiGraph g = oracle::random_graph(rng, 4, 0.4);
    for (Vertex x = 0; x < g.size(); ++x)
      for (Vertex y = 0; y < g.size(); ++y) {
        auto a = zigzag_nfa(g, x, y);
        for (const auto& w : oracle::all_strings(4)) ASSERT_EQ(nfa_accepts(a, Word(w)), oracle::walk_exists(g, x, y, w));
      }
  }
}

TEST(Metric, MatrixExamples) {
  auto one = distance_matrix(DiGraph(1));
  EXPECT_EQ(one.size(), 1u);
  EXPECT_EQ(one(0, 0), UpSet::zero());
  DiGraph p(3);
  p.add_arc(0, 1);
  p.add_arc(1, 2);
  auto d = distance_matrix(p);
  EXPECT_EQ(d(0, 2), U({"++"}));
  EXPECT_EQ(d(2, 0), U({"--"}));
  auto iso = distance_matrix(DiGraph(2));
  EXPECT_TRUE(iso(0, 1).is_top());
  EXPECT_TRUE(iso(1, 0).is_top());
}

TEST(Metric, MatrixAgreesWithPerPairDistance) {
  std::mt19937 rng(2);
  for (int t = 0; t < 30; ++t) {
    DiGraph g = oracle::random_graph(rng, 5, 0.3);
    auto d = distance_matrix(g);
    for (Vertex x = 0; x < g.size(); ++x)
      for (Vertex y = 0; y < g.size(); ++y) ASSERT_EQ(d(x, y), distance(g, x, y));
  }
}

TEST(Metric, AxiomsHoldOnAllSmallOrientedGraphs) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::uint64_t c = 0; c < oriented_graph_count(n); ++c) {
      DiGraph g = oriented_graph_from_code(n, c);
      auto d = distance_matrix(g);
      ASSERT_TRUE(verify_metric_axioms(d).empty());
      for (Vertex x = 0; x < n; ++x)
        for (Vertex y = 0; y < n; ++y)
          for (const auto& gen : d(x, y).generators()) ASSERT_LE(gen.length(), n - 1);
    }
}

TEST(Metric, AxiomsHoldOnRandomDirectedGraphs) {
  std::mt19937 rng(3);
  for (int t = 0; t < 40; ++t) {
    std::uniform_int_distribution<std::size_t> size(5, 7);
    DiGraph g = oracle::random_graph(rng, size(rng), 0.3);
    EXPECT_TRUE(verify_metric_axioms(distance_matrix(g)).empty());
  }
}

TEST(Metric, AxiomViolationsAreReported) {
  DistanceMatrix m({"a", "b"});
  for (Vertex x = 0; x < 2; ++x)
    for (Vertex y = 0; y < 2; ++y) m.at(x, y) = UpSet::zero();
  auto v = verify_metric_axioms(m);
  ASSERT_FALSE(v.empty());
  EXPECT_EQ(v.front().kind, MetricViolation::Kind::separation);

  DistanceMatrix n({"a", "b"});
  n.at(0, 0) = n.at(1, 1) = UpSet::zero();
  n.at(0, 1) = U({"+"});
  n.at(1, 0) = U({"+"});
  auto w = verify_metric_axioms(n);
  EXPECT_TRUE(std::any_of(w.begin(), w.end(), [](const auto& e) { return e.kind == MetricViolation::Kind::involution; }));
}

TEST(Metric, DecompositionExamples) {
  auto d = distance_matrix(cycle(3));
  EXPECT_TRUE(d(0, 2).contains(W("-")));
  EXPECT_TRUE(d(2, 1).contains(W("-")));
  EXPECT_TRUE(decomposition_check(d, 3).ok());

  DistanceMatrix m({"a", "b"});
  m.at(0, 0) = m.at(1, 1) = UpSet::zero();
  m.at(0, 1) = U({"++"});
  m.at(1, 0) = U({"--"});
  EXPECT_FALSE(decomposition_check(m, 2).ok());
}

TEST(Metric, DecompositionHoldsForGraphMetrics) {
  std::mt19937 rng(4);
  for (int t = 0; t < 30; ++t) {
    DiGraph g = oracle::random_graph(rng, 4, 0.4);
    EXPECT_TRUE(decomposition_check(distance_matrix(g), g.size()).ok());
  }
}

TEST(Metric, GraphFromMetricRoundTrip) {
  DiGraph p(3);
  p.add_arc(0, 1);
  p.add_arc(1, 2);
  EXPECT_EQ(graph_from_metric(distance_matrix(p)), p);
  EXPECT_EQ(graph_from_metric(distance_matrix(DiGraph(3))).arc_count(), 0u);
  EXPECT_EQ(graph_from_metric(distance_matrix(cycle(3))), cycle(3));
  std::mt19937 rng(5);
  for (int t = 0; t < 30; ++t) {
    DiGraph g = oracle::random_graph(rng, 5, 0.3);
    EXPECT_EQ(graph_from_metric(distance_matrix(g)), g);
  }
}

TEST(Metric, HomomorphismsAreExactlyNonExpansiveMaps) {
  std::mt19937 rng(6);
  for (int t = 0; t < 300; ++t) {
    std::uniform_int_distribution<std::size_t> size(1, 5);
    DiGraph g = oracle::random_graph(rng, size(rng), 0.4), h = oracle::random_graph(rng, size(rng), 0.5);
    auto dg = distance_matrix(g), dh = distance_matrix(h);
    std::uniform_int_distribution<Vertex> pick(0, h.size() - 1);
    std::vector<Vertex> f(g.size());
    for (auto& v : f) v = pick(rng);
    bool hom = true;
    for (auto [x, y] : g.arcs()) hom = hom && h.adjacent_or_equal(f[x], f[y]);
    bool nonexp = true;
    for (Vertex x = 0; x < g.size(); ++x)
      for (Vertex y = 0; y < g.size(); ++y) nonexp = nonexp && upset_leq(dh(f[x], f[y]), dg(x, y));
    ASSERT_EQ(hom, nonexp);
  }
}

TEST(Metric, QuantaleDistanceRecoversGraphDistance) {
  std::mt19937 rng(7);
  for (int t = 0; t < 40; ++t) {
    DiGraph g = oracle::random_graph(rng, 4, 0.4);
    auto d = distance_matrix(g);
    for (Vertex x = 0; x < g.size(); ++x)
      for (Vertex y = 0; y < g.size(); ++y) {
        UpSet acc = UpSet::zero();
        for (Vertex z = 0; z < g.size(); ++z) acc = join(acc, quantale_distance(d(z, x), d(z, y)));
        ASSERT_EQ(acc, d(x, y));
      }
  }
}

// ---- products and balls -----------------------------------------------------

TEST(Product, TwoSingleArcs) {
  DiGraph a = zigzag_of_word(W("+"));
  std::vector<DiGraph> gs{a, a};
  DiGraph p = product_graph(gs);
  EXPECT_EQ(p.size(), 4u);
  EXPECT_EQ(p.arc_count(), 5u);
  auto v = [&](const char* s) { return p.vertex(s); };
  EXPECT_TRUE(p.has_arc(v("(0,0)"), v("(1,1)")));
  EXPECT_TRUE(p.has_arc(v("(0,0)"), v("(0,1)")));
  EXPECT_TRUE(p.has_arc(v("(0,0)"), v("(1,0)")));
  EXPECT_TRUE(p.has_arc(v("(0,1)"), v("(1,1)")));
  EXPECT_TRUE(p.has_arc(v("(1,0)"), v("(1,1)")));
}

TEST(Product, WithSingleVertexIsACopy) {
  DiGraph z = zigzag_of_word(W("+-+"));
  std::vector<DiGraph> gs{z, DiGraph(1)};
  DiGraph p = product_graph(gs);
  EXPECT_EQ(p.size(), z.size());
  EXPECT_EQ(p.arc_count(), z.arc_count());
}

TEST(Product, DistanceIsJoinOfCoordinates) {
  for (const auto& u : words_up_to(3))
    for (const auto& v : words_up_to(3)) {
      std::vector<DiGraph> gs{zigzag_of_word(u), zigzag_of_word(v)};
      DiGraph p = product_graph(gs);
      auto dp = distance_matrix(p);
      auto d0 = distance_matrix(gs[0]), d1 = distance_matrix(gs[1]);
      for (Vertex a = 0; a < p.size(); ++a)
        for (Vertex b = 0; b < p.size(); ++b) {
          auto ca = product_coordinates(gs, a), cb = product_coordinates(gs, b);
          ASSERT_EQ(dp(a, b), join(d0(ca[0], cb[0]), d1(ca[1], cb[1])));
        }
    }
}

TEST(Ball, Examples) {
  DiGraph p(2);
  p.add_arc(0, 1);
  EXPECT_EQ(ball(p, 0, W("+")), (std::vector<Vertex>{0, 1}));
  EXPECT_EQ(ball(cycle(3), 2, W("e")), (std::vector<Vertex>{2}));
  EXPECT_EQ(ball(cycle(3), 0, W("+")), (std::vector<Vertex>{0, 1}));
}

TEST(Ball, IdentityAndMonotoneRadii) {
  std::mt19937 rng(8);
  auto radii = words_up_to(5);
  for (int t = 0; t < 15; ++t) {
    DiGraph g = oracle::random_graph(rng, 5, 0.3);
    auto d = distance_matrix(g);
    for (Vertex x = 0; x < g.size(); ++x)
      for (const auto& r : radii) {
        std::vector<Vertex> expect;
        for (Vertex y = 0; y < g.size(); ++y)
          if (d(x, y).contains(r)) expect.push_back(y);
        auto b = ball(g, x, r);
        ASSERT_EQ(b, expect);
        for (Letter a : kLetters) {
          auto bigger = ball(g, x, r + a);
          ASSERT_TRUE(std::includes(bigger.begin(), bigger.end(), b.begin(), b.end()));
        }
      }
  }
}
