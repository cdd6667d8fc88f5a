#ifndef SUMDIST_TESTS_SUPPORT_HPP
#define SUMDIST_TESTS_SUPPORT_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "sumdist/hypergraph.hpp"
#include "sumdist/random.hpp"

// Brute-force reference implementations kept deliberately naive and free of
// library calls beyond the data types.

namespace testing_support {

using sumdist::Edge;
using sumdist::Graph;
using sumdist::Hypergraph;
using sumdist::Label;
using sumdist::Vertex;

inline bool naive_distinct(const std::vector<Edge>& edges, const std::vector<Label>& f) {
  std::set<Label> sums;
  for (const Edge& e : edges) {
    Label s = 0;
    for (Vertex v : e) s += f[v];
    if (!sums.insert(s).second) return false;
  }
  return true;
}

/// Calls fn(f) for every f in [bound]^n, last coordinate fastest. Stops when
/// fn returns true and reports whether it did.
template <class Fn>
bool for_each_labeling(std::size_t n, Label bound, Fn&& fn) {
  std::vector<Label> f(n, 1);
  for (;;) {
    if (fn(static_cast<const std::vector<Label>&>(f))) return true;
    std::size_t i = n;
    while (i > 0 && f[i - 1] == bound) f[--i] = 1;
    if (i == 0) return false;
    ++f[i - 1];
  }
}

inline Label brute_s(std::size_t n, const std::vector<Edge>& edges) {
  for (Label bound = 1;; ++bound)
    if (for_each_labeling(n, bound, [&](const std::vector<Label>& f) { return naive_distinct(edges, f); }))
      return bound;
}

inline std::vector<Edge> closed_neighborhoods(const Graph& g) {
  std::set<Edge> s;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    Edge e{v};
    for (Vertex u : g.neighbors(v)) e.push_back(u);
    std::sort(e.begin(), e.end());
    s.insert(e);
  }
  return {s.begin(), s.end()};
}

inline Label brute_s_star(const Graph& g) { return brute_s(g.vertex_count(), closed_neighborhoods(g)); }

/// All labeled graphs on n vertices, as edge lists.
inline std::vector<Graph> all_graphs(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> slots;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    Graph::EdgeList edges;
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (mask >> i & 1) edges.push_back(slots[i]);
    out.emplace_back(n, edges);
  }
  return out;
}

/// Random duplicate-free hypergraph with m edges drawn from nonempty subsets.
inline Hypergraph random_hypergraph(std::size_t n, std::size_t m, sumdist::Rng& rng) {
  if (m >= (std::uint64_t{1} << n)) throw std::invalid_argument("more edges than nonempty subsets");
  std::set<Edge> seen;
  std::vector<Edge> edges;
  while (edges.size() < m) {
    const std::uint64_t mask = 1 + rng.below((std::uint64_t{1} << n) - 1);
    Edge e;
    for (Vertex v = 0; v < n; ++v)
      if (mask >> v & 1) e.push_back(v);
    if (seen.insert(e).second) edges.push_back(e);
  }
  return Hypergraph(n, edges);
}

inline Graph random_graph(std::size_t n, double p, sumdist::Rng& rng) {
  Graph::EdgeList edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

inline Graph star(std::size_t n) {
  Graph::EdgeList edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(0, v);
  return Graph(n, edges);
}

inline Graph path(std::size_t n) {
  Graph::EdgeList edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

}  // namespace testing_support

#endif
