#include <gtest/gtest.h>

#include "sumdist/construct.hpp"
#include "sumdist/exact.hpp"
#include "sumdist/genx.hpp"
#include "support.hpp"

using namespace sumdist;
namespace ts = testing_support;

namespace {

Graph complete_graph(std::size_t n, Vertex offset = 0, Graph::EdgeList edges = {}) {
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(offset + u, offset + v);
  return Graph(offset + n, edges);
}

std::size_t bad_pairs(const Graph& g, const Labeling& f) {
  const auto s = closed_sums(g, f);
  std::size_t bad = 0;
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    for (Vertex v = u + 1; v < g.vertex_count(); ++v)
      if (s[u] == s[v] && g.closed_neighborhood(u) != g.closed_neighborhood(v)) ++bad;
  return bad;
}

}  // namespace

TEST(Bounds, Examples) {
  const auto k4 = s_star_bounds(complete_graph(4));
  EXPECT_EQ(k4.distinct_neighborhoods, 1u);
  EXPECT_EQ(k4.min_degree, 3u);
  EXPECT_EQ(k4.max_degree, 3u);
  EXPECT_EQ(k4.lower, 1u);
  EXPECT_EQ(k4.xi, 2u);

  // K_4 disjoint union K_2
  Graph::EdgeList e;
  for (Vertex u = 0; u < 4; ++u)
    for (Vertex v = u + 1; v < 4; ++v) e.emplace_back(u, v);
  e.emplace_back(4, 5);
  const auto mixed = s_star_bounds(Graph(6, e));
  EXPECT_EQ(mixed.distinct_neighborhoods, 2u);
  EXPECT_EQ(mixed.lower, 1u);

  const auto p3 = s_star_bounds(ts::path(3));
  EXPECT_EQ(p3.distinct_neighborhoods, 3u);
  EXPECT_EQ(p3.min_degree, 1u);
  EXPECT_EQ(p3.max_degree, 2u);
  EXPECT_EQ(p3.lower, 2u);
  EXPECT_EQ(p3.xi, 4u);
  EXPECT_EQ(p3.upper_loose, 9u);
}

TEST(Bounds, BracketExactOnSmallGraphs) {
  for (std::size_t n = 2; n <= 4; ++n)
    for (const Graph& g : ts::all_graphs(n)) {
      if (g.edge_count() == 0) continue;
      const auto b = s_star_bounds(g);
      const Label s = ts::brute_s_star(g);
      EXPECT_LE(b.lower, s);
      EXPECT_LE(s, b.xi);
      EXPECT_LE(b.lower, b.xi);
      EXPECT_LE(b.xi, b.upper_loose);
    }
}

TEST(Repair, Examples) {
  const auto p3 = repair_labeler(ts::path(3));
  EXPECT_TRUE(is_vertex_sum_distinguishing(ts::path(3), p3.labeling));
  EXPECT_LE(p3.labeling.max_label(), 4u);
  ASSERT_FALSE(p3.trace.empty());
  EXPECT_EQ(p3.trace[0].u, 0u);
  EXPECT_EQ(p3.trace[0].v, 2u);
  EXPECT_EQ(p3.trace[0].relabeled, 0u);

  const auto k4 = repair_labeler(complete_graph(4));
  EXPECT_EQ(k4.labeling, Labeling::all_ones(4));
  EXPECT_TRUE(k4.trace.empty());
}

TEST(Repair, EmptyGraph) {
  const Graph g(4, {});
  const auto r = repair_labeler(g);
  EXPECT_EQ(r.xi, 5u);
  EXPECT_TRUE(is_vertex_sum_distinguishing(g, r.labeling));
  EXPECT_LE(r.labeling.max_label(), r.xi);
}

TEST(Repair, RandomGraphs) {
  Rng rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng.below(14);
    const Graph g = ts::random_graph(n, 0.1 + 0.8 * rng.unit(), rng);
    const auto r = repair_labeler(g);
    EXPECT_TRUE(is_vertex_sum_distinguishing(g, r.labeling));
    EXPECT_LE(r.labeling.max_label(), r.xi);
    EXPECT_LE(r.trace.size(), n * (n - 1) / 2);
    // replay the trace against an independent bad-pair count
    std::vector<Label> f(n, 1);
    for (const auto& step : r.trace) {
      EXPECT_EQ(bad_pairs(g, Labeling(f)), step.bad_before);
      EXPECT_EQ(f[step.relabeled], step.old_label);
      f[step.relabeled] = step.new_label;
      EXPECT_EQ(bad_pairs(g, Labeling(f)), step.bad_after);
      EXPECT_LT(step.bad_after, step.bad_before);
    }
    EXPECT_EQ(Labeling(f), r.labeling);
    EXPECT_EQ(repair_labeler(g).labeling, r.labeling);
  }
}

TEST(LeafStat, Examples) {
  EXPECT_EQ(leaf_stat(ts::star(5)).leaves, 4u);
  EXPECT_EQ(leaf_stat(ts::star(5)).vertex, 0u);
  EXPECT_EQ(leaf_stat(ts::path(4)).leaves, 1u);
  EXPECT_EQ(leaf_stat(ts::path(4)).vertex, 1u);
  EXPECT_EQ(leaf_stat(ts::path(2)).leaves, 1u);
  EXPECT_THROW(leaf_stat(Graph(3, {{0, 1}})), ShapeError);
  EXPECT_THROW(leaf_stat(complete_graph(3)), ShapeError);
}

TEST(Tree, Examples) {
  const auto star = tree_labeler(ts::star(5));
  EXPECT_EQ(star, Labeling({1, 1, 2, 3, 4}));
  EXPECT_TRUE(is_vertex_sum_distinguishing(ts::star(5), star));

  const auto p4 = tree_labeler(ts::path(4));
  EXPECT_TRUE(is_vertex_sum_distinguishing(ts::path(4), p4));
  EXPECT_LE(p4.max_label(), 5u);

  EXPECT_EQ(tree_labeler(ts::path(2)), Labeling({1, 1}));
  EXPECT_THROW(tree_labeler(Graph(1, {})), ShapeError);
  EXPECT_THROW(tree_labeler(complete_graph(3)), ShapeError);
}

TEST(Tree, RandomTreesMeetBound) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const std::size_t n = 3 + seed % 40;
    const Graph t = gen_random_tree(n, seed);
    const auto f = tree_labeler(t);
    EXPECT_TRUE(is_vertex_sum_distinguishing(t, f));
    EXPECT_LE(f.max_label(), 2 * n - 2 - leaf_stat(t).leaves);
  }
}

TEST(Tree, StarTightness) {
  for (std::size_t n = 3; n <= 7; ++n) {
    const Graph s = ts::star(n);
    EXPECT_EQ(exact_s_star(s).optimum, n - 1);
    EXPECT_EQ(tree_labeler(s).max_label(), n - 1);
  }
}

TEST(Tree, PrueferTreesAreTrees) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Graph t = gen_random_tree(2 + seed % 20, seed);
    EXPECT_EQ(t.edge_count(), t.vertex_count() - 1);
    EXPECT_NO_THROW(leaf_stat(t));
  }
}
