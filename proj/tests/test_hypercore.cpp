#include <gtest/gtest.h>

#include "sumdist/exact.hpp"
#include "sumdist/hypergraph.hpp"
#include "support.hpp"

using namespace sumdist;
namespace ts = testing_support;

namespace {

Hypergraph H(std::size_t n, std::vector<Edge> edges) { return Hypergraph(n, std::move(edges)); }
Labeling L(std::vector<Label> v) { return Labeling(std::move(v)); }

}  // namespace

TEST(Hypergraph, RejectsInvalidInput) {
  EXPECT_THROW(H(0, {}), ValidationError);
  EXPECT_THROW(H(2, {{}}), ValidationError);
  EXPECT_THROW(H(2, {{0, 2}}), ValidationError);
  EXPECT_THROW(H(2, {{0, 0}}), ValidationError);
  EXPECT_THROW(H(2, {{0, 1}, {1, 0}}), ValidationError);
  EXPECT_NO_THROW(H(3, {}));
}

TEST(Hypergraph, SortsEdgeVertices) {
  auto h = H(3, {{2, 0}});
  EXPECT_EQ(h.edge(0), (Edge{0, 2}));
}

TEST(Graph, RejectsLoopsAndDuplicates) {
  EXPECT_THROW(Graph(2, {{0, 0}}), ValidationError);
  EXPECT_THROW(Graph(2, {{0, 1}, {1, 0}}), ValidationError);
  EXPECT_THROW(Graph(2, {{0, 2}}), ValidationError);
  Graph g(3, {{2, 1}, {0, 1}});
  EXPECT_EQ(g.edges(), (Graph::EdgeList{{0, 1}, {1, 2}}));
  EXPECT_EQ(g.closed_neighborhood(1), (Edge{0, 1, 2}));
}

TEST(Labeling, RejectsZero) {
  EXPECT_THROW(L({1, 0}), ValidationError);
  EXPECT_EQ(L({3, 1, 2}).max_label(), 3u);
}

TEST(EdgeSums, Examples) {
  EXPECT_EQ(edge_sums(H(2, {{0}, {0, 1}}), L({1, 1})), (std::vector<Label>{1, 2}));
  EXPECT_EQ(edge_sums(complete_hypergraph(3), L({1, 2, 4})), (std::vector<Label>{1, 2, 4, 3, 5, 6, 7}));
  EXPECT_EQ(edge_sums(H(3, {{0, 1}, {1, 2}}), L({1, 1, 2})), (std::vector<Label>{2, 3}));
}

TEST(EdgeSums, DimensionMismatch) {
  EXPECT_THROW(edge_sums(H(2, {{0}}), L({1})), DimensionError);
  EXPECT_THROW(is_distinguishing(H(2, {{0}}), L({1, 1, 1})), DimensionError);
}

TEST(EdgeSums, OverflowIsReported) {
  const Label big = std::numeric_limits<Label>::max() - 1;
  EXPECT_THROW(edge_sums(H(2, {{0, 1}}), L({big, big})), OverflowError);
}

TEST(IsDistinguishing, Examples) {
  EXPECT_TRUE(is_distinguishing(H(2, {{0}, {1}}), L({1, 2})));
  EXPECT_FALSE(is_distinguishing(H(2, {{0}, {1}}), L({1, 1})));
  EXPECT_FALSE(is_distinguishing(complete_hypergraph(3), L({1, 2, 3})));
}

TEST(IsDistinguishing, AgreesWithSumRepeats) {
  Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng.below(5);
    const auto h = ts::random_hypergraph(n, 1 + rng.below(std::min<std::uint64_t>(8, (1u << n) - 1)), rng);
    std::vector<Label> f(n);
    for (auto& x : f) x = rng.uniform_label(4);
    auto sums = edge_sums(h, Labeling(f));
    std::sort(sums.begin(), sums.end());
    const bool repeats = std::adjacent_find(sums.begin(), sums.end()) != sums.end();
    EXPECT_EQ(is_distinguishing(h, Labeling(f)), !repeats);
  }
}

TEST(VertexSums, Examples) {
  EXPECT_TRUE(is_vertex_sum_distinguishing(Graph(2, {{0, 1}}), L({1, 1})));
  EXPECT_FALSE(is_vertex_sum_distinguishing(ts::path(3), L({1, 1, 1})));
  EXPECT_TRUE(is_vertex_sum_distinguishing(ts::path(3), L({1, 1, 2})));
  EXPECT_EQ(closed_sums(ts::path(3), L({1, 1, 2})), (std::vector<Label>{2, 4, 3}));
}

TEST(VertexSums, MatchesClosedNeighborhoodHypergraph) {
  Rng rng(5);
  for (std::size_t n = 1; n <= 5; ++n)
    for (const Graph& g : ts::all_graphs(n))
      for (int k = 0; k < 3; ++k) {
        std::vector<Label> f(n);
        for (auto& x : f) x = rng.uniform_label(3);
        const auto nh = closed_neighborhood_hypergraph(g);
        EXPECT_EQ(is_vertex_sum_distinguishing(g, Labeling(f)), is_distinguishing(nh.hypergraph, Labeling(f)));
      }
}

TEST(Dual, Examples) {
  auto d = dual(H(3, {{0, 1}, {1, 2}}));
  EXPECT_EQ(d.hypergraph, H(2, {{0}, {0, 1}, {1}}));
  EXPECT_TRUE(d.skipped.empty());
  EXPECT_EQ(dual(H(2, {{0, 1}, {1}})).hypergraph, H(2, {{0}, {0, 1}}));
}

TEST(Dual, DegenerateNamesVertices) {
  try {
    dual(H(2, {{0, 1}}));
    FAIL() << "expected DualDegenerate";
  } catch (const DualDegenerate& e) {
    EXPECT_EQ(e.first(), 0u);
    EXPECT_EQ(e.second(), 1u);
    EXPECT_TRUE(e.infeasible());
  }
}

TEST(Dual, SkipsOneUncoveredVertex) {
  auto d = dual(H(3, {{0}, {0, 1}}));
  EXPECT_EQ(d.skipped, (std::vector<Vertex>{2}));
  EXPECT_EQ(d.source_vertex, (std::vector<Vertex>{0, 1}));
  EXPECT_EQ(d.hypergraph.edge_count(), 2u);
  // two uncovered vertices share the empty incidence set
  EXPECT_THROW(dual(H(3, {{0}})), DualDegenerate);
}

TEST(Dual, InvolutionOnRandomInstances) {
  Rng rng(17);
  int checked = 0;
  while (checked < 200) {
    const std::size_t n = 2 + rng.below(4);
    const auto h = ts::random_hypergraph(n, 1 + rng.below(std::min<std::uint64_t>(6, (1u << n) - 1)), rng);
    const auto inc = h.incidence();
    std::set<std::vector<std::uint32_t>> distinct(inc.begin(), inc.end());
    const bool covered = std::none_of(inc.begin(), inc.end(), [](const auto& s) { return s.empty(); });
    if (distinct.size() != n) {
      EXPECT_THROW(dual(h), DualDegenerate);
      continue;
    }
    const auto d = dual(h);
    EXPECT_EQ(d.hypergraph.vertex_count(), h.edge_count());
    EXPECT_LE(d.hypergraph.edge_count(), h.vertex_count());
    if (!covered) continue;
    EXPECT_EQ(dual(d.hypergraph).hypergraph, h);
    ++checked;
  }
}

TEST(ClosedNeighborhood, Examples) {
  EXPECT_EQ(closed_neighborhood_hypergraph(ts::path(3)).hypergraph, H(3, {{0, 1}, {0, 1, 2}, {1, 2}}));
  const auto k2 = closed_neighborhood_hypergraph(Graph(2, {{0, 1}}));
  EXPECT_EQ(k2.hypergraph, H(2, {{0, 1}}));
  EXPECT_EQ(k2.groups.size(), 1u);
  EXPECT_EQ(k2.groups[0], (std::vector<Vertex>{0, 1}));
  EXPECT_EQ(closed_neighborhood_hypergraph(Graph(3, {})).hypergraph, H(3, {{0}, {1}, {2}}));
}

TEST(OpenNeighborhood, Examples) {
  EXPECT_EQ(open_neighborhood_hypergraph(Graph(2, {{0, 1}})).hypergraph, H(2, {{1}, {0}}));
  EXPECT_EQ(open_neighborhood_hypergraph(ts::path(3)).hypergraph, H(3, {{1}, {0, 2}}));
  EXPECT_THROW(open_neighborhood_hypergraph(Graph(3, {{0, 1}})), EmptyNeighborhood);
}

TEST(OpenNeighborhood, ComplementIdentity) {
  // N(v) in G is V minus N[v] in the complement of G
  for (const Graph& g : ts::all_graphs(4)) {
    Graph::EdgeList comp;
    for (Vertex u = 0; u < 4; ++u)
      for (Vertex v = u + 1; v < 4; ++v)
        if (!g.adjacent(u, v)) comp.emplace_back(u, v);
    const Graph c(4, comp);
    for (Vertex v = 0; v < 4; ++v) {
      Edge rest;
      const Edge cn = c.closed_neighborhood(v);
      for (Vertex u = 0; u < 4; ++u)
        if (!std::binary_search(cn.begin(), cn.end(), u)) rest.push_back(u);
      EXPECT_EQ(rest, g.neighbors(v));
    }
  }
}

TEST(SplitEmbed, Examples) {
  const auto s = split_embed(H(2, {{0}, {0, 1}}));
  EXPECT_EQ(s.graph, Graph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}}));
  EXPECT_EQ(s.b_offset, 2u);
  EXPECT_EQ(split_embed(H(1, {{0}})).graph, Graph(2, {{0, 1}}));
  EXPECT_THROW(split_embed(H(2, {{0}})), ShapeError);
}

TEST(SplitEmbed, RestrictionOfOptimalWitness) {
  const Hypergraph h = H(2, {{0}, {0, 1}});
  const auto s = split_embed(h);
  const auto r = exact_s_star(s.graph);
  EXPECT_TRUE(is_distinguishing(h, s.restrict_to_b(r.witness)));
}

TEST(SplitEmbed, EveryDistinguishingLabelingRestricts) {
  Rng rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng.below(4);
    const Hypergraph h = ts::random_hypergraph(n, n, rng);
    const auto s = split_embed(h);
    const std::size_t nn = s.graph.vertex_count();
    ts::for_each_labeling(nn, 3, [&](const std::vector<Label>& f) {
      const Labeling lf(f);
      if (is_vertex_sum_distinguishing(s.graph, lf)) EXPECT_TRUE(is_distinguishing(h, s.restrict_to_b(lf)));
      return false;
    });
  }
}

TEST(InjectiveReduction, Examples) {
  EXPECT_EQ(injective_reduction(H(3, {{0, 1}})), H(3, {{0, 1}, {0}, {1}, {2}}));
  const auto full = H(2, {{0}, {1}, {0, 1}});
  EXPECT_EQ(injective_reduction(full), full);
  EXPECT_EQ(injective_reduction(H(2, {{0}})), H(2, {{0}, {1}}));
}

TEST(InjectiveReduction, DistinguishingLabelingsAreInjective) {
  Rng rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + rng.below(2);
    const Hypergraph h = injective_reduction(ts::random_hypergraph(n, 1 + rng.below(3), rng));
    ts::for_each_labeling(n, 4, [&](const std::vector<Label>& f) {
      if (is_distinguishing(h, Labeling(f))) {
        std::set<Label> values(f.begin(), f.end());
        EXPECT_EQ(values.size(), n);
      }
      return false;
    });
  }
}

TEST(PowerOfTwo, Examples) {
  EXPECT_EQ(power_of_two_labeling(3), L({1, 2, 4}));
  EXPECT_EQ(power_of_two_labeling(1), L({1}));
  EXPECT_TRUE(is_distinguishing(complete_hypergraph(3), power_of_two_labeling(3)));
  EXPECT_EQ(power_of_two_labeling(3).max_label(), 4u);
  EXPECT_THROW(power_of_two_labeling(0), ValidationError);
  EXPECT_THROW(power_of_two_labeling(64), OverflowError);
}

TEST(PowerOfTwo, DistinguishesRandomHypergraphs) {
  Rng rng(31);
  for (std::size_t n = 2; n <= 10; ++n) {
    const auto f = power_of_two_labeling(n);
    for (int trial = 0; trial < 200; ++trial) {
      const auto h = ts::random_hypergraph(n, 1 + rng.below(std::min<std::uint64_t>(40, (1u << n) - 1)), rng);
      ASSERT_TRUE(is_distinguishing(h, f));
    }
  }
}

TEST(CompleteHypergraph, OrderAndSize) {
  const auto h = complete_hypergraph(3);
  EXPECT_EQ(h.edges(), (std::vector<Edge>{{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}, {0, 1, 2}}));
  EXPECT_EQ(complete_hypergraph(5).edge_count(), 31u);
}
