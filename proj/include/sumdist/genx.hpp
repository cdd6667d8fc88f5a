#ifndef SUMDIST_GENX_HPP
#define SUMDIST_GENX_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sumdist/hypergraph.hpp"
#include "sumdist/random.hpp"

namespace sumdist {

inline constexpr std::uint64_t kSubsetEnumerationLimit = 10'000'000;

namespace detail {

/// binom(n, k), saturating at `cap + 1`.
inline std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 c = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    c = c * (n - k + i) / i;
    if (c > cap) return cap + 1;
  }
  return static_cast<std::uint64_t>(c);
}

/// Calls fn(subset) for every k-subset of {0..n-1} in lexicographic order.
template <class Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return;
  Edge s(k);
  for (std::size_t i = 0; i < k; ++i) s[i] = static_cast<Vertex>(i);
  for (;;) {
    fn(static_cast<const Edge&>(s));
    std::size_t i = k;
    while (i > 0 && s[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++s[i - 1];
    for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
  }
}

inline void require_enumerable(std::uint64_t n, std::uint64_t r) {
  if (binomial_capped(n, r, kSubsetEnumerationLimit) > kSubsetEnumerationLimit)
    throw TooLarge("binom(" + std::to_string(n) + "," + std::to_string(r) + ") exceeds the enumeration guard");
}

inline long double factorial(std::uint64_t r) {
  long double f = 1;
  for (std::uint64_t i = 2; i <= r; ++i) f *= static_cast<long double>(i);
  return f;
}

// q sqrt(ln N) / sqrt(N^{r-1}) with q = sqrt(13 r r!)
inline long double lemma2_probability(std::uint64_t r, std::uint64_t n) {
  const long double q = std::sqrt(13.0L * static_cast<long double>(r) * factorial(r));
  return q * std::sqrt(std::log(static_cast<long double>(n))) /
         std::sqrt(std::pow(static_cast<long double>(n), static_cast<long double>(r - 1)));
}

}  // namespace detail

struct Lemma2Params {
  std::uint64_t r = 0;
  std::uint64_t n = 0;  // N, the vertex count
  long double q = 0;    // sqrt(13 r r!)
  long double p = 0;    // q sqrt(ln N) / sqrt(N^{r-1})
  std::uint64_t s = 0;  // floor(N^r / (2 r r!))
  long double expected_edges = 0;  // p binom(N, r)
};

inline Lemma2Params lemma2_params(std::uint64_t r, std::uint64_t n) {
  using boost::multiprecision::cpp_int;
  if (r < 2 || n < 2) throw DomainError("need r >= 2 and N >= 2");
  if (r > 20) throw DomainError("r! must fit in 64 bits (r <= 20)");
  Lemma2Params out;
  out.r = r;
  out.n = n;
  out.q = std::sqrt(13.0L * static_cast<long double>(r) * detail::factorial(r));
  out.p = detail::lemma2_probability(r, n);
  if (out.p > 1)
    throw ParamsOutOfRange("edge probability " + std::to_string(static_cast<double>(out.p)) + " > 1 for r=" +
                           std::to_string(r) + ", N=" + std::to_string(n));
  cpp_int fact = 1;
  for (std::uint64_t i = 2; i <= r; ++i) fact *= i;
  const cpp_int s = boost::multiprecision::pow(cpp_int(n), static_cast<unsigned>(r)) / (2 * r * fact);
  if (s > cpp_int(std::numeric_limits<std::uint64_t>::max())) throw TooLarge("s does not fit in 64 bits");
  out.s = s.convert_to<std::uint64_t>();
  if (out.s < 1) throw ParamsOutOfRange("label budget s is 0");
  long double binom = 1;
  for (std::uint64_t i = 1; i <= r; ++i)
    binom = binom * static_cast<long double>(n - r + i) / static_cast<long double>(i);
  out.expected_edges = out.p * binom;
  return out;
}

/// G_r(N, p): each r-subset of {0..N-1} independently with probability p,
/// listed in lexicographic order.
inline Hypergraph gen_runiform(std::uint64_t n, std::uint64_t r, double p, std::uint64_t seed) {
  if (!(p >= 0 && p <= 1)) throw DomainError("p must lie in [0,1]");
  if (n == 0 || r == 0) throw DomainError("need N >= 1 and r >= 1");
  detail::require_enumerable(n, r);
  Rng rng(seed);
  std::vector<Edge> edges;
  detail::for_each_subset(n, r, [&](const Edge& e) {
    if (rng.bernoulli(p)) edges.push_back(e);
  });
  return Hypergraph(n, std::move(edges));
}

struct LowerBoundInstance {
  Hypergraph hypergraph;
  std::uint64_t r = 0;
  std::uint64_t core_vertices = 0;  // N; the remaining n - N vertices are isolated
  double edge_probability = 0;      // min(1, lemma p)
  std::uint64_t sampled_edges = 0;  // before trimming or padding to m
};

/// n-vertex, m-edge instance: an r-uniform random core on N = floor(m^{2/(r+1+2 delta)})
/// vertices, with r the least integer satisfying eps > 2/(r+1), brought to
/// exactly m edges and padded with isolated vertices.
inline LowerBoundInstance lower_bound_instance(std::uint64_t n, std::uint64_t m, double eps, std::uint64_t seed,
                                               double delta = 0.1, std::uint64_t r_cap = 64) {
  if (n == 0 || m == 0) throw DomainError("need n, m >= 1");
  if (n > m) throw DomainError("need n <= m");
  if (!(eps > 0 && eps < 1)) throw DomainError("eps must lie in (0,1)");
  if (!(delta > 0)) throw DomainError("delta must be positive");
  std::uint64_t r = 1;
  while (r <= r_cap && !(eps > 2.0 / static_cast<double>(r + 1))) ++r;
  if (r > r_cap) throw InfeasibleParams("no r <= " + std::to_string(r_cap) + " with eps > 2/(r+1)");
  const double exponent = 2.0 / (static_cast<double>(r + 1) + 2 * delta);
  const auto core = static_cast<std::uint64_t>(std::floor(std::pow(static_cast<double>(m), exponent)));
  if (core > n) throw InfeasibleParams("core size N=" + std::to_string(core) + " exceeds n=" + std::to_string(n));
  if (core < r || detail::binomial_capped(core, r, kSubsetEnumerationLimit) < m)
    throw InfeasibleParams("m=" + std::to_string(m) + " exceeds binom(" + std::to_string(core) + "," +
                           std::to_string(r) + ")");
  detail::require_enumerable(core, r);

  const double p = core >= 2 ? std::min(1.0L, detail::lemma2_probability(r, core)) : 1.0;
  Rng rng(seed);
  std::vector<Edge> present, missing;
  detail::for_each_subset(core, r, [&](const Edge& e) {
    (rng.bernoulli(p) ? present : missing).push_back(e);
  });
  const std::uint64_t sampled = present.size();
  // partial Fisher-Yates: the first k entries become a uniform k-sample
  auto sample_front = [&](std::vector<Edge>& pool, std::size_t k) {
    for (std::size_t i = 0; i < k; ++i) std::swap(pool[i], pool[i + rng.below(pool.size() - i)]);
  };
  if (present.size() > m) {
    sample_front(present, m);
    present.resize(m);
  } else if (present.size() < m) {
    const std::size_t need = m - present.size();
    sample_front(missing, need);
    present.insert(present.end(), missing.begin(), missing.begin() + static_cast<std::ptrdiff_t>(need));
  }
  std::sort(present.begin(), present.end());
  return {Hypergraph(n, std::move(present)), r, core, p, sampled};
}

/// h_k: number of r-subsets of {0..N-1} whose labels sum to k.
inline std::map<Label, std::uint64_t> sum_class_histogram(std::uint64_t n, std::uint64_t r, const Labeling& f) {
  if (f.size() != n) throw DimensionError("labeling length must equal N");
  detail::require_enumerable(n, r);
  std::map<Label, std::uint64_t> hist;
  detail::for_each_subset(n, r, [&](const Edge& e) {
    Label s = 0;
    for (Vertex v : e) s = detail::checked_add(s, f[v]);
    ++hist[s];
  });
  return hist;
}

/// m distinct nonempty edges, each vertex joining an edge with probability
/// `density`; rejected draws (empty or repeated edges) are redrawn.
inline Hypergraph gen_random_hypergraph(std::uint64_t n, std::uint64_t m, double density, std::uint64_t seed) {
  if (n == 0) throw DomainError("need n >= 1");
  if (!(density > 0 && density <= 1)) throw DomainError("density must lie in (0,1]");
  if (n < 63 && m > (std::uint64_t{1} << n) - 1) throw InfeasibleParams("more edges than nonempty subsets");
  Rng rng(seed);
  std::set<Edge> seen;
  std::vector<Edge> edges;
  std::uint64_t draws = 0;
  while (edges.size() < m) {
    if (++draws > 1000 * (m + 1)) throw BudgetExhausted("could not draw enough distinct edges");
    Edge e;
    for (Vertex v = 0; v < n; ++v)
      if (rng.bernoulli(density)) e.push_back(v);
    if (e.empty() || !seen.insert(e).second) continue;
    edges.push_back(std::move(e));
  }
  return Hypergraph(n, std::move(edges));
}

/// G(n, p).
inline Graph gen_random_graph(std::uint64_t n, double p, std::uint64_t seed) {
  Rng rng(seed);
  Graph::EdgeList edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

/// Uniform labeled tree via a random Pruefer sequence.
inline Graph gen_random_tree(std::uint64_t n, std::uint64_t seed) {
  if (n < 2) throw DomainError("a tree needs n >= 2");
  Rng rng(seed);
  std::vector<Vertex> code(n - 2);
  for (auto& c : code) c = static_cast<Vertex>(rng.below(n));
  std::vector<std::size_t> degree(n, 1);
  for (Vertex c : code) ++degree[c];
  Graph::EdgeList edges;
  std::set<Vertex> leaves;
  for (Vertex v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.insert(v);
  for (Vertex c : code) {
    const Vertex leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.emplace_back(leaf, c);
    if (--degree[c] == 1) leaves.insert(c);
  }
  const Vertex a = *leaves.begin(), b = *std::next(leaves.begin());
  edges.emplace_back(a, b);
  return Graph(n, edges);
}

}  // namespace sumdist

#endif
