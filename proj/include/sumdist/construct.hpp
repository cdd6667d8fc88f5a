#ifndef SUMDIST_CONSTRUCT_HPP
#define SUMDIST_CONSTRUCT_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "sumdist/hypergraph.hpp"

// Deterministic labelers for closed-neighborhood sums: local repair on an
// arbitrary graph, and leaf-by-leaf induction on trees.

namespace sumdist {

struct DegreeBoundsReport {
  std::size_t distinct_neighborhoods = 0;  // n': vertices with pairwise distinct N[v], maximum family
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
  std::uint64_t xi = 0;  // max_v (n - d(v) - 1)(d(v) + 1) + 2
  std::uint64_t lower = 0;  // ceil((n' + min_degree) / (max_degree + 1))
  std::uint64_t upper_loose = 0;  // (max_degree + 1) n
};

inline std::size_t count_distinct_closed_neighborhoods(const Graph& g) {
  std::set<Edge> seen;
  for (Vertex v = 0; v < g.vertex_count(); ++v) seen.insert(g.closed_neighborhood(v));
  return seen.size();
}

inline DegreeBoundsReport s_star_bounds(const Graph& g) {
  const std::uint64_t n = g.vertex_count();
  DegreeBoundsReport r;
  r.distinct_neighborhoods = count_distinct_closed_neighborhoods(g);
  r.min_degree = g.degree(0);
  for (Vertex v = 0; v < n; ++v) {
    const std::uint64_t d = g.degree(v);
    r.min_degree = std::min<std::size_t>(r.min_degree, d);
    r.max_degree = std::max<std::size_t>(r.max_degree, d);
    r.xi = std::max(r.xi, (n - d - 1) * (d + 1) + 2);
  }
  const std::uint64_t num = r.distinct_neighborhoods + r.min_degree, den = r.max_degree + 1;
  r.lower = (num + den - 1) / den;
  r.upper_loose = den * n;
  return r;
}

struct RepairStep {
  Vertex u = 0, v = 0;  // the bad pair that triggered the step
  Vertex relabeled = 0;
  Label old_label = 0, new_label = 0;
  std::size_t bad_before = 0, bad_after = 0;
};

struct RepairResult {
  Labeling labeling;
  std::uint64_t xi = 0;
  std::vector<RepairStep> trace;
};

namespace detail {

// Pairs u < v with N[u] != N[v] and equal closed sums. Vertices with equal
// closed neighborhoods always have equal sums, so
//   bad = #(pairs with equal sums) - #(pairs with equal N[]).
inline std::size_t count_bad_pairs(const std::vector<Label>& sums, const std::vector<std::uint32_t>& class_of) {
  std::map<Label, std::size_t> by_sum;
  std::map<std::pair<Label, std::uint32_t>, std::size_t> by_class;
  for (std::size_t v = 0; v < sums.size(); ++v) {
    ++by_sum[sums[v]];
    ++by_class[{sums[v], class_of[v]}];
  }
  std::size_t bad = 0;
  for (auto& [s, c] : by_sum) bad += c * (c - 1) / 2;
  for (auto& [k, c] : by_class) bad -= c * (c - 1) / 2;
  return bad;
}

}  // namespace detail

/// Starts from all ones and repeatedly fixes the lexicographically smallest
/// bad pair (u, v) by relabeling one vertex x with the smallest value in
/// [xi] that creates no new bad pair. Every step strictly lowers the number
/// of bad pairs, so at most C(n,2) steps are taken and all labels stay <= xi.
inline RepairResult repair_labeler(const Graph& g) {
  const std::size_t n = g.vertex_count();
  const auto nh = closed_neighborhood_hypergraph(g);
  const auto& class_of = nh.edge_of;
  RepairResult out;
  out.xi = s_star_bounds(g).xi;
  std::vector<Label> f(n, 1);

  auto sums = closed_sums(g, Labeling(f));
  std::size_t bad = detail::count_bad_pairs(sums, class_of);
  std::vector<char> in_closed(n);
  while (bad > 0) {
    RepairStep step;
    bool found = false;
    for (Vertex u = 0; u < n && !found; ++u)
      for (Vertex v = u + 1; v < n && !found; ++v)
        if (sums[u] == sums[v] && class_of[u] != class_of[v]) {
          step.u = u;
          step.v = v;
          found = true;
        }
    Vertex x = step.u;
    if (g.adjacent(step.u, step.v)) {
      const Edge a = g.closed_neighborhood(step.u), b = g.closed_neighborhood(step.v);
      Edge diff;
      std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(diff));
      x = diff.front();  // nonempty since N[u] != N[v]
    }

    std::fill(in_closed.begin(), in_closed.end(), 0);
    for (Vertex y : g.closed_neighborhood(x)) in_closed[y] = 1;
    // Forbidden: the current label, and every t making s*(y) - f(x) + t equal
    // to s*(y') for y in N[x], y' outside it.
    std::set<Label> forbidden{f[x]};
    std::set<Label> inside, outside;
    for (Vertex y = 0; y < n; ++y) (in_closed[y] ? inside : outside).insert(sums[y]);
    for (Label sy : inside)
      for (Label sy2 : outside) {
        // t = s*(y') - s*(y) + f(x) must be positive to matter
        if (sy2 + f[x] > sy) forbidden.insert(sy2 + f[x] - sy);
      }
    Label t = 1;
    for (Label blocked : forbidden) {
      if (blocked == t) ++t;
      else if (blocked > t) break;
    }
    if (t > out.xi) throw std::logic_error("repair: every label in [xi] is forbidden");

    step.relabeled = x;
    step.old_label = f[x];
    step.new_label = t;
    step.bad_before = bad;
    f[x] = t;
    for (Vertex y = 0; y < n; ++y)
      if (in_closed[y]) sums[y] = sums[y] - step.old_label + t;
    bad = detail::count_bad_pairs(sums, class_of);
    step.bad_after = bad;
    if (step.bad_after >= step.bad_before) throw std::logic_error("repair: bad-pair count did not decrease");
    out.trace.push_back(step);
  }
  out.labeling = Labeling(std::move(f));
  if (!is_vertex_sum_distinguishing(g, out.labeling)) throw std::logic_error("repair: output failed verification");
  return out;
}

struct LeafStat {
  std::size_t leaves = 0;  // L(T): max over u of the number of leaf neighbors of u
  Vertex vertex = 0;       // smallest vertex attaining it
};

namespace detail {

inline void require_tree(const Graph& t) {
  const std::size_t n = t.vertex_count();
  if (n < 2) throw ShapeError("tree labeling needs at least 2 vertices");
  if (t.edge_count() != n - 1) throw ShapeError("graph is not a tree: " + std::to_string(t.edge_count()) + " edges on " + std::to_string(n) + " vertices");
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : t.neighbors(v))
      if (!seen[u]) {
        seen[u] = 1;
        ++reached;
        stack.push_back(u);
      }
  }
  if (reached != n) throw ShapeError("graph is not a tree: it is disconnected");
}

// Leaf statistics restricted to the vertices with alive[v] set.
inline LeafStat leaf_stat_alive(const Graph& t, const std::vector<char>& alive, const std::vector<std::size_t>& degree) {
  LeafStat best;
  bool first = true;
  for (Vertex u = 0; u < t.vertex_count(); ++u) {
    if (!alive[u]) continue;
    std::size_t leaves = 0;
    for (Vertex w : t.neighbors(u))
      if (alive[w] && degree[w] == 1) ++leaves;
    if (first || leaves > best.leaves) {
      best = {leaves, u};
      first = false;
    }
  }
  return best;
}

}  // namespace detail

inline LeafStat leaf_stat(const Graph& t) {
  detail::require_tree(t);
  std::vector<char> alive(t.vertex_count(), 1);
  std::vector<std::size_t> degree(t.vertex_count());
  for (Vertex v = 0; v < t.vertex_count(); ++v) degree[v] = t.degree(v);
  return detail::leaf_stat_alive(t, alive, degree);
}

/// Labels a tree on n >= 3 vertices with max label <= 2n - 2 - L(T).
/// Leaves are peeled off next to a vertex with the most leaf neighbors until
/// a star remains; the star gets leaves 1..k and center 1, then each peeled
/// leaf is put back with the smallest label avoiding every new collision.
inline Labeling tree_labeler(const Graph& t) {
  detail::require_tree(t);
  const std::size_t n = t.vertex_count();
  std::vector<char> alive(n, 1);
  std::vector<std::size_t> degree(n);
  for (Vertex v = 0; v < n; ++v) degree[v] = t.degree(v);

  struct Peel {
    Vertex leaf, parent;
  };
  std::vector<Peel> peeled;
  std::size_t alive_count = n;
  auto is_star = [&] {
    for (Vertex v = 0; v < n; ++v)
      if (alive[v] && degree[v] == alive_count - 1) return true;
    return false;
  };
  while (!is_star()) {
    const LeafStat ls = detail::leaf_stat_alive(t, alive, degree);
    Vertex leaf = 0;
    for (Vertex w : t.neighbors(ls.vertex))
      if (alive[w] && degree[w] == 1) {
        leaf = w;
        break;
      }
    peeled.push_back({leaf, ls.vertex});
    alive[leaf] = 0;
    --degree[ls.vertex];
    --alive_count;
  }

  std::vector<Label> f(n, 0);
  {
    Vertex center = 0;
    for (Vertex v = 0; v < n; ++v)
      if (alive[v] && degree[v] == alive_count - 1) {
        center = v;
        break;
      }
    f[center] = 1;
    Label next = 1;
    for (Vertex v = 0; v < n; ++v)
      if (alive[v] && v != center) f[v] = next++;
  }

  // closed sums within the alive subtree
  std::vector<Label> sums(n, 0);
  auto recompute = [&] {
    for (Vertex v = 0; v < n; ++v) {
      if (!alive[v]) continue;
      Label s = f[v];
      for (Vertex w : t.neighbors(v))
        if (alive[w]) s += f[w];
      sums[v] = s;
    }
  };
  recompute();

  for (auto it = peeled.rbegin(); it != peeled.rend(); ++it) {
    const Vertex v = it->leaf, u = it->parent;
    // u's leaf neighbors once v is back; they cannot clash with u's sum
    std::vector<char> leaf_of_u(n, 0);
    std::size_t leaves_of_u = 1;
    for (Vertex w : t.neighbors(u))
      if (alive[w] && degree[w] == 1) {
        leaf_of_u[w] = 1;
        ++leaves_of_u;
      }
    std::set<std::int64_t> forbidden;
    for (Vertex w = 0; w < n; ++w) {
      if (!alive[w] || w == u) continue;
      if (!leaf_of_u[w]) forbidden.insert(static_cast<std::int64_t>(sums[w]) - static_cast<std::int64_t>(sums[u]));
      forbidden.insert(static_cast<std::int64_t>(sums[w]) - static_cast<std::int64_t>(f[u]));
    }
    // |X| <= 2|T*| - |L(u)| - 2, so [2|T*| - |L(u)|] always has room
    const Label bound = 2 * alive_count - leaves_of_u;
    Label label = 1;
    while (forbidden.count(static_cast<std::int64_t>(label))) ++label;
    if (label > bound) throw std::logic_error("tree labeler: no admissible label");
    f[v] = label;
    alive[v] = 1;
    ++degree[u];
    ++alive_count;
    sums[v] = f[u] + label;
    sums[u] += label;
  }

  Labeling out(std::move(f));
  if (!is_vertex_sum_distinguishing(t, out)) throw std::logic_error("tree labeler: output failed verification");
  return out;
}

}  // namespace sumdist

#endif
