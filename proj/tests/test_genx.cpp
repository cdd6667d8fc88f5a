#include <gtest/gtest.h>

#include <cmath>

#include "sumdist/genx.hpp"

using namespace sumdist;

TEST(Lemma2Params, FrozenValues) {
  const auto p = lemma2_params(2, 10000);
  EXPECT_NEAR(static_cast<double>(p.q), 7.21110255092797858623844253494, 1e-12);
  EXPECT_NEAR(static_cast<double>(p.p), 0.218846452871130973301557225182, 1e-13);
  EXPECT_EQ(p.s, 12'500'000u);
  EXPECT_NEAR(static_cast<double>(p.expected_edges), 10941228.411292193010211353473, 1e-4);
}

TEST(Lemma2Params, RecomputeFromFormulas) {
  for (std::uint64_t r : {2u, 3u, 4u})
    for (std::uint64_t n : {2000u, 50000u}) {
      Lemma2Params p;
      try {
        p = lemma2_params(r, n);
      } catch (const ParamsOutOfRange&) {
        continue;
      }
      long double fact = 1;
      for (std::uint64_t i = 2; i <= r; ++i) fact *= i;
      EXPECT_EQ(p.q, std::sqrt(13.0L * r * fact));
      EXPECT_NEAR(static_cast<double>(p.p),
                  static_cast<double>(p.q * std::sqrt(std::log(static_cast<long double>(n))) /
                                      std::sqrt(std::pow(static_cast<long double>(n), r - 1.0L))),
                  1e-15);
      EXPECT_EQ(p.s, static_cast<std::uint64_t>(std::floor(std::pow(static_cast<long double>(n), r) / (2 * r * fact))));
      EXPECT_GE(p.s, 1u);
    }
}

TEST(Lemma2Params, Errors) {
  EXPECT_THROW(lemma2_params(2, 100), ParamsOutOfRange);
  EXPECT_THROW(lemma2_params(1, 100), DomainError);
  EXPECT_THROW(lemma2_params(2, 1), DomainError);
}

TEST(GenRUniform, Extremes) {
  const auto none = gen_runiform(6, 2, 0.0, 1);
  EXPECT_EQ(none.edge_count(), 0u);
  EXPECT_EQ(none.vertex_count(), 6u);
  const auto all = gen_runiform(6, 3, 1.0, 1);
  EXPECT_EQ(all.edge_count(), 20u);
  EXPECT_THROW(gen_runiform(6, 2, 1.5, 1), DomainError);
  EXPECT_THROW(gen_runiform(100, 10, 0.5, 1), TooLarge);
}

TEST(GenRUniform, DeterministicPerSeed) {
  EXPECT_EQ(gen_runiform(12, 3, 0.3, 9), gen_runiform(12, 3, 0.3, 9));
  EXPECT_NE(gen_runiform(12, 3, 0.3, 9), gen_runiform(12, 3, 0.3, 10));
}

TEST(GenRUniform, EdgeCountConcentrates) {
  const double mu = 0.2 * 435;
  double sum = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) sum += gen_runiform(30, 2, 0.2, seed).edge_count();
  const double sigma_mean = std::sqrt(435 * 0.2 * 0.8 / 200);
  EXPECT_LE(std::fabs(sum / 200 - mu), 4 * sigma_mean);
}

TEST(LowerBound, Example) {
  const auto inst = lower_bound_instance(100, 100, 0.9, 5);
  EXPECT_EQ(inst.r, 2u);
  EXPECT_EQ(inst.core_vertices, 17u);
  EXPECT_EQ(inst.hypergraph.vertex_count(), 100u);
  EXPECT_EQ(inst.hypergraph.edge_count(), 100u);
  EXPECT_EQ(inst.edge_probability, 1.0);
  const auto inc = inst.hypergraph.incidence();
  for (Vertex v = 17; v < 100; ++v) EXPECT_TRUE(inc[v].empty());
  for (const Edge& e : inst.hypergraph.edges()) EXPECT_EQ(e.size(), 2u);
}

TEST(LowerBound, ChoosesSmallestR) {
  EXPECT_EQ(lower_bound_instance(200, 200, 0.6, 1).r, 3u);  // 2/3 >= 0.6 > 2/4
  EXPECT_EQ(lower_bound_instance(200, 5000, 0.5, 1).r, 4u);
  EXPECT_THROW(lower_bound_instance(200, 200, 0.5, 1), InfeasibleParams);  // binom(7, 4) < 200
}

TEST(LowerBound, Errors) {
  EXPECT_THROW(lower_bound_instance(100, 100, 0.01, 1), InfeasibleParams);
  EXPECT_THROW(lower_bound_instance(5, 100, 0.9, 1), InfeasibleParams);
  EXPECT_THROW(lower_bound_instance(3, 3, 0.9, 1), InfeasibleParams);
  EXPECT_THROW(lower_bound_instance(10, 5, 0.9, 1), DomainError);
  EXPECT_THROW(lower_bound_instance(10, 10, 1.5, 1), DomainError);
}

TEST(LowerBound, ShapesAcrossSeeds) {
  for (std::uint64_t seed = 0; seed < 20; ++seed)
    for (auto [n, m] : {std::pair{60, 60}, std::pair{100, 150}, std::pair{300, 400}}) {
      const auto inst = lower_bound_instance(n, m, 0.9, seed);
      EXPECT_EQ(inst.hypergraph.vertex_count(), static_cast<std::size_t>(n));
      EXPECT_EQ(inst.hypergraph.edge_count(), static_cast<std::size_t>(m));
      const auto inc = inst.hypergraph.incidence();
      for (Vertex v = static_cast<Vertex>(inst.core_vertices); v < static_cast<Vertex>(n); ++v)
        EXPECT_TRUE(inc[v].empty());
    }
}

TEST(SumClassHistogram, Examples) {
  EXPECT_EQ(sum_class_histogram(3, 2, Labeling({1, 2, 3})), (std::map<Label, std::uint64_t>{{3, 1}, {4, 1}, {5, 1}}));
  EXPECT_EQ(sum_class_histogram(3, 2, Labeling({1, 1, 2})), (std::map<Label, std::uint64_t>{{2, 1}, {3, 2}}));
  EXPECT_THROW(sum_class_histogram(4, 2, Labeling({1, 1, 2})), DimensionError);
}

TEST(SumClassHistogram, TotalsAndDistinguishing) {
  Rng rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const std::uint64_t n = 3 + rng.below(6), r = 1 + rng.below(3);
    std::vector<Label> f(n);
    for (auto& x : f) x = rng.uniform_label(12);
    const auto hist = sum_class_histogram(n, r, Labeling(f));
    std::uint64_t total = 0;
    bool injective = true;
    for (auto [k, c] : hist) {
      total += c;
      injective &= c <= 1;
    }
    const auto complete = gen_runiform(n, r, 1.0, 0);
    EXPECT_EQ(total, complete.edge_count());
    EXPECT_EQ(injective, is_distinguishing(complete, Labeling(f)));
  }
}

TEST(RandomHypergraph, Shape) {
  const auto h = gen_random_hypergraph(40, 40, 0.5, 3);
  EXPECT_EQ(h.vertex_count(), 40u);
  EXPECT_EQ(h.edge_count(), 40u);
  EXPECT_EQ(h, gen_random_hypergraph(40, 40, 0.5, 3));
  EXPECT_THROW(gen_random_hypergraph(2, 4, 0.5, 3), InfeasibleParams);
  EXPECT_THROW(gen_random_hypergraph(2, 1, 0.0, 3), DomainError);
}

TEST(RandomGraph, Density) {
  EXPECT_EQ(gen_random_graph(10, 0.0, 1).edge_count(), 0u);
  EXPECT_EQ(gen_random_graph(10, 1.0, 1).edge_count(), 45u);
}
