#ifndef SUMDIST_HYPERGRAPH_HPP
#define SUMDIST_HYPERGRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sumdist/error.hpp"

namespace sumdist {

using Vertex = std::uint32_t;
using Label = std::uint64_t;
using Edge = std::vector<Vertex>;  // sorted, duplicate-free

namespace detail {

inline Label checked_add(Label a, Label b) {
  if (a > std::numeric_limits<Label>::max() - b) throw OverflowError("label sum exceeds 64 bits");
  return a + b;
}

inline std::string edge_to_string(const Edge& e) {
  std::string out = "{";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(e[i]);
  }
  return out + "}";
}

}  // namespace detail

/// A finite hypergraph on vertices 0..n-1 with an ordered list of distinct,
/// nonempty edges. Immutable after construction.
class Hypergraph {
 public:
  Hypergraph(std::size_t vertex_count, std::vector<Edge> edges)
      : n_(vertex_count), edges_(std::move(edges)) {
    if (n_ == 0) throw ValidationError("hypergraph must have at least one vertex");
    if (n_ > std::numeric_limits<Vertex>::max()) throw ValidationError("too many vertices");
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      Edge& e = edges_[i];
      if (e.empty()) throw ValidationError("edge " + std::to_string(i) + " is empty");
      std::sort(e.begin(), e.end());
      if (std::adjacent_find(e.begin(), e.end()) != e.end())
        throw ValidationError("edge " + std::to_string(i) + " repeats a vertex");
      if (e.back() >= n_)
        throw ValidationError("edge " + std::to_string(i) + " has vertex " +
                              std::to_string(e.back()) + " out of range [0," +
                              std::to_string(n_) + ")");
    }
    std::vector<std::size_t> order(edges_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return edges_[a] != edges_[b] ? edges_[a] < edges_[b] : a < b;
    });
    for (std::size_t k = 1; k < order.size(); ++k) {
      if (edges_[order[k - 1]] == edges_[order[k]])
        throw ValidationError("edges " + std::to_string(order[k - 1]) + " and " +
                              std::to_string(order[k]) + " are both " +
                              detail::edge_to_string(edges_[order[k]]));
    }
  }

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_.at(i); }

  /// incidence()[v] lists the indices of the edges containing v, ascending.
  std::vector<std::vector<std::uint32_t>> incidence() const {
    std::vector<std::vector<std::uint32_t>> inc(n_);
    for (std::size_t i = 0; i < edges_.size(); ++i)
      for (Vertex v : edges_[i]) inc[v].push_back(static_cast<std::uint32_t>(i));
    return inc;
  }

  bool contains_edge(const Edge& sorted_edge) const {
    return std::find(edges_.begin(), edges_.end(), sorted_edge) != edges_.end();
  }

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
};

/// Simple undirected graph.
class Graph {
 public:
  using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

  Graph(std::size_t vertex_count, const EdgeList& edges) : n_(vertex_count), adj_(vertex_count) {
    if (n_ == 0) throw ValidationError("graph must have at least one vertex");
    if (n_ > std::numeric_limits<Vertex>::max()) throw ValidationError("too many vertices");
    for (std::size_t i = 0; i < edges.size(); ++i) {
      auto [u, v] = edges[i];
      if (u >= n_ || v >= n_)
        throw ValidationError("edge " + std::to_string(i) + " has an endpoint out of range");
      if (u == v) throw ValidationError("edge " + std::to_string(i) + " is a loop");
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    for (Vertex v = 0; v < n_; ++v) {
      auto& a = adj_[v];
      std::sort(a.begin(), a.end());
      auto dup = std::adjacent_find(a.begin(), a.end());
      if (dup != a.end())
        throw ValidationError("edge {" + std::to_string(v) + "," + std::to_string(*dup) +
                              "} appears twice");
      for (Vertex u : a)
        if (v < u) edges_.emplace_back(v, u);
    }
  }

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  /// Edges as (u, v) with u < v, sorted lexicographically.
  const EdgeList& edges() const noexcept { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(v); }
  std::size_t degree(Vertex v) const { return adj_.at(v).size(); }

  bool adjacent(Vertex u, Vertex v) const {
    const auto& a = adj_.at(u);
    return std::binary_search(a.begin(), a.end(), v);
  }

  Edge closed_neighborhood(Vertex v) const {
    Edge out = adj_.at(v);
    out.insert(std::upper_bound(out.begin(), out.end(), v), v);
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  std::size_t n_;
  std::vector<std::vector<Vertex>> adj_;
  EdgeList edges_;
};

/// Positive integer label per vertex.
class Labeling {
 public:
  Labeling() = default;
  explicit Labeling(std::vector<Label> values) : values_(std::move(values)) {
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (values_[i] == 0) throw ValidationError("label of vertex " + std::to_string(i) + " is 0");
      max_ = std::max(max_, values_[i]);
    }
  }

  static Labeling all_ones(std::size_t n) { return Labeling(std::vector<Label>(n, 1)); }

  std::size_t size() const noexcept { return values_.size(); }
  Label operator[](std::size_t v) const { return values_[v]; }
  const std::vector<Label>& values() const noexcept { return values_; }
  Label max_label() const noexcept { return max_; }

  friend bool operator==(const Labeling&, const Labeling&) = default;

 private:
  std::vector<Label> values_;
  Label max_ = 0;
};

namespace detail {

inline void require_size(std::size_t vertices, const Labeling& f) {
  if (f.size() != vertices)
    throw DimensionError("labeling has " + std::to_string(f.size()) + " values for " +
                         std::to_string(vertices) + " vertices");
}

inline bool all_distinct(std::vector<Label> sums) {
  std::sort(sums.begin(), sums.end());
  return std::adjacent_find(sums.begin(), sums.end()) == sums.end();
}

}  // namespace detail

inline std::vector<Label> edge_sums(const Hypergraph& h, const Labeling& f) {
  detail::require_size(h.vertex_count(), f);
  std::vector<Label> sums;
  sums.reserve(h.edge_count());
  for (const Edge& e : h.edges()) {
    Label s = 0;
    for (Vertex v : e) s = detail::checked_add(s, f[v]);
    sums.push_back(s);
  }
  return sums;
}

inline bool is_distinguishing(const Hypergraph& h, const Labeling& f) {
  return detail::all_distinct(edge_sums(h, f));
}

/// s*(v): the label sum over the closed neighborhood of v.
inline std::vector<Label> closed_sums(const Graph& g, const Labeling& f) {
  detail::require_size(g.vertex_count(), f);
  std::vector<Label> sums(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    Label s = f[v];
    for (Vertex u : g.neighbors(v)) s = detail::checked_add(s, f[u]);
    sums[v] = s;
  }
  return sums;
}

/// Closed-neighborhood sums differ for every pair of vertices whose closed
/// neighborhoods differ. Pairs with N[u] == N[v] are exempt.
inline bool is_vertex_sum_distinguishing(const Graph& g, const Labeling& f) {
  auto sums = closed_sums(g, f);
  std::vector<Vertex> order(g.vertex_count());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return sums[a] < sums[b]; });
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j < order.size() && sums[order[j]] == sums[order[i]]) ++j;
    if (j - i > 1) {
      const Edge first = g.closed_neighborhood(order[i]);
      for (std::size_t k = i + 1; k < j; ++k)
        if (g.closed_neighborhood(order[k]) != first) return false;
      // Equal N[] is an equivalence relation, so comparing against the first suffices.
    }
    i = j;
  }
  return true;
}

/// Vertices of H in no edge are skipped; `source_vertex[i]` is the vertex of
/// H whose incidence set became edge i of the dual.
struct DualResult {
  Hypergraph hypergraph;
  std::vector<Vertex> source_vertex;
  std::vector<Vertex> skipped;
};

/// Dual hypergraph: one vertex per edge of H, one edge per covered vertex of
/// H holding the indices of the edges through it. Throws DualDegenerate when
/// two vertices have identical incidence sets (this includes two uncovered
/// vertices, which share the empty set).
inline DualResult dual(const Hypergraph& h) {
  if (h.edge_count() == 0) throw ValidationError("dual of a hypergraph without edges has no vertices");
  auto inc = h.incidence();
  std::map<std::vector<std::uint32_t>, Vertex> seen;
  std::vector<Edge> edges;
  std::vector<Vertex> source, skipped;
  for (Vertex x = 0; x < h.vertex_count(); ++x) {
    auto [it, fresh] = seen.emplace(inc[x], x);
    if (!fresh) throw DualDegenerate(it->second, x);
    if (inc[x].empty()) {
      skipped.push_back(x);
      continue;
    }
    edges.push_back(inc[x]);
    source.push_back(x);
  }
  return {Hypergraph(h.edge_count(), std::move(edges)), std::move(source), std::move(skipped)};
}

/// Hypergraph of neighborhoods with duplicates collapsed. `edge_of[v]` is the
/// index of the edge equal to v's neighborhood; `groups` lists, per edge, the
/// vertices that share it (groups of size > 1 are the collapsed ones).
struct NeighborhoodHypergraph {
  Hypergraph hypergraph;
  std::vector<std::uint32_t> edge_of;
  std::vector<std::vector<Vertex>> groups;
};

namespace detail {

template <class NeighborhoodFn>
NeighborhoodHypergraph collapse_neighborhoods(std::size_t n, NeighborhoodFn&& nbhd) {
  std::map<Edge, std::uint32_t> index;
  std::vector<Edge> edges;
  std::vector<std::uint32_t> edge_of(n);
  std::vector<std::vector<Vertex>> groups;
  for (Vertex v = 0; v < n; ++v) {
    Edge e = nbhd(v);
    auto [it, fresh] = index.emplace(e, static_cast<std::uint32_t>(edges.size()));
    if (fresh) {
      edges.push_back(std::move(e));
      groups.emplace_back();
    }
    edge_of[v] = it->second;
    groups[it->second].push_back(v);
  }
  return {Hypergraph(n, std::move(edges)), std::move(edge_of), std::move(groups)};
}

}  // namespace detail

inline NeighborhoodHypergraph closed_neighborhood_hypergraph(const Graph& g) {
  return detail::collapse_neighborhoods(g.vertex_count(),
                                        [&](Vertex v) { return g.closed_neighborhood(v); });
}

/// Open neighborhoods N(v). In G these equal V - N[v] taken in the complement.
inline NeighborhoodHypergraph open_neighborhood_hypergraph(const Graph& g) {
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 0) throw EmptyNeighborhood(v);
  return detail::collapse_neighborhoods(g.vertex_count(), [&](Vertex v) { return g.neighbors(v); });
}

/// Graph on A ∪ B with A = {0..n-1} a clique standing for the edges of H and
/// B = {n..2n-1} an independent set standing for its vertices; a_i ~ b_j iff
/// vertex j lies in edge i. Restricting a vertex-sum-distinguishing labeling
/// of the graph to B gives a distinguishing labeling of H.
struct SplitEmbedding {
  Graph graph;
  std::size_t b_offset;

  Labeling restrict_to_b(const Labeling& f) const {
    detail::require_size(graph.vertex_count(), f);
    std::vector<Label> out(f.values().begin() + static_cast<std::ptrdiff_t>(b_offset), f.values().end());
    return Labeling(std::move(out));
  }
};

inline SplitEmbedding split_embed(const Hypergraph& h) {
  const std::size_t n = h.vertex_count();
  if (h.edge_count() != n)
    throw ShapeError("split embedding needs |E| == |V|, got " + std::to_string(h.edge_count()) +
                     " edges on " + std::to_string(n) + " vertices");
  Graph::EdgeList edges;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex b : h.edge(i)) edges.emplace_back(i, static_cast<Vertex>(n + b));
  return {Graph(2 * n, edges), n};
}

/// H plus every singleton {v} that is not already an edge (appended in vertex
/// order). Distinguishing labelings of the result are injective.
inline Hypergraph injective_reduction(const Hypergraph& h) {
  std::vector<Edge> edges = h.edges();
  for (Vertex v = 0; v < h.vertex_count(); ++v)
    if (!h.contains_edge(Edge{v})) edges.push_back(Edge{v});
  return Hypergraph(h.vertex_count(), std::move(edges));
}

/// (1, 2, 4, ..., 2^{n-1}); distinguishing on every hypergraph on n vertices.
inline Labeling power_of_two_labeling(std::size_t n) {
  if (n == 0) throw ValidationError("power-of-two labeling needs n >= 1");
  if (n > 63) throw OverflowError("2^n - 1 does not fit in 64 bits for n = " + std::to_string(n));
  std::vector<Label> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = Label{1} << i;
  return Labeling(std::move(v));
}

/// Complete hypergraph: all 2^n - 1 nonempty subsets, ordered by size and
/// then lexicographically ({0},{1},...,{0,1},{0,2},...).
inline Hypergraph complete_hypergraph(std::size_t n) {
  if (n == 0 || n > 24) throw ValidationError("complete hypergraph supports 1 <= n <= 24");
  std::vector<Edge> edges;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    Edge e;
    for (Vertex v = 0; v < n; ++v)
      if (mask >> v & 1u) e.push_back(v);
    edges.push_back(std::move(e));
  }
  std::stable_sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return Hypergraph(n, std::move(edges));
}

}  // namespace sumdist

#endif
