#ifndef SUMDIST_EXACT_HPP
#define SUMDIST_EXACT_HPP

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "sumdist/construct.hpp"
#include "sumdist/hypergraph.hpp"

// Exact s(H) by iterative deepening on the label bound N with a depth-first
// assignment of vertices. The vertex order is fixed once so that edges are
// completed as early as possible; a branch dies as soon as two complete
// edges share a sum.

namespace sumdist {

struct SolveOptions {
  std::uint64_t node_budget = 10'000'000;
  /// Start deepening here if larger than the built-in bound (must be a valid
  /// lower bound on the optimum).
  Label lower_bound = 1;
};

struct SolveResult {
  Label optimum = 0;
  Labeling witness;
  std::uint64_t nodes_expanded = 0;
  std::chrono::nanoseconds elapsed{0};
  Label start_bound = 0;  // first N tried
};

namespace detail {

/// Counting bound: the c_k edges of size k have sums in [k, kN], so
/// c_k <= k(N-1) + 1; and all m sums lie in [k_min, k_max N].
inline Label counting_lower_bound(const Hypergraph& h) {
  if (h.edge_count() <= 1) return 1;
  std::map<std::size_t, std::uint64_t> by_size;
  std::size_t kmin = h.vertex_count(), kmax = 0;
  for (const Edge& e : h.edges()) {
    ++by_size[e.size()];
    kmin = std::min(kmin, e.size());
    kmax = std::max(kmax, e.size());
  }
  Label lb = 1;
  for (auto [k, c] : by_size) lb = std::max<Label>(lb, 1 + (c - 1 + k - 1) / k);
  const std::uint64_t m = h.edge_count();
  lb = std::max<Label>(lb, (m + kmin - 1 + kmax - 1) / kmax);
  return lb;
}

class LabelSearch {
 public:
  explicit LabelSearch(const Hypergraph& h) : h_(h), inc_(h.incidence()) {
    const std::size_t n = h.vertex_count();
    std::vector<std::size_t> remaining(h.edge_count());
    for (std::size_t e = 0; e < h.edge_count(); ++e) remaining[e] = h.edge(e).size();
    std::vector<char> placed(n, 0);
    for (Vertex v = 0; v < n; ++v) {
      if (inc_[v].empty()) placed[v] = 1;
      else max_edge_ = std::max(max_edge_, inc_[v].size());
    }
    for (const Edge& e : h.edges()) max_size_ = std::max(max_size_, e.size());
    // Greedy: the vertex completing the most edges now; ties by the number
    // of edges it advances, then by index.
    for (;;) {
      std::size_t best_done = 0, best_touch = 0;
      std::optional<Vertex> best;
      for (Vertex v = 0; v < n; ++v) {
        if (placed[v]) continue;
        std::size_t done = 0;
        for (auto e : inc_[v])
          if (remaining[e] == 1) ++done;
        const std::size_t touch = inc_[v].size();
        if (!best || done > best_done || (done == best_done && touch > best_touch)) {
          best = v;
          best_done = done;
          best_touch = touch;
        }
      }
      if (!best) break;
      placed[*best] = 1;
      std::vector<std::uint32_t> completes;
      for (auto e : inc_[*best])
        if (--remaining[e] == 0) completes.push_back(e);
      order_.push_back(*best);
      completes_.push_back(std::move(completes));
    }
  }

  const std::vector<Vertex>& order() const noexcept { return order_; }

  /// First distinguishing labeling with labels in [1, N] in search order, or
  /// nullopt. Throws BudgetExhausted once `nodes` passes `budget`.
  std::optional<Labeling> run(Label bound, std::uint64_t& nodes, std::uint64_t budget) {
    bound_ = bound;
    nodes_ = &nodes;
    budget_ = budget;
    const std::uint64_t max_sum = static_cast<std::uint64_t>(max_size_) * bound;
    if (bound > (std::uint64_t{1} << 40) || max_sum > (std::uint64_t{1} << 28))
      throw BudgetExhausted("label bound too large for the sum table", bound, bound);
    used_.assign(max_sum + 1, 0);
    esum_.assign(h_.edge_count(), 0);
    label_.assign(h_.vertex_count(), 1);
    if (!descend(0)) return std::nullopt;
    return Labeling(label_);
  }

 private:
  bool descend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex v = order_[depth];
    const auto& done = completes_[depth];
    for (Label x = 1; x <= bound_; ++x) {
      if (++*nodes_ > budget_) throw BudgetExhausted("node budget exhausted");
      label_[v] = x;
      for (auto e : inc_[v]) esum_[e] += x;
      std::size_t marked = 0;
      for (; marked < done.size(); ++marked) {
        const auto s = esum_[done[marked]];
        if (used_[s]) break;
        used_[s] = 1;
      }
      const bool ok = marked == done.size();
      if (ok && descend(depth + 1)) return true;
      for (std::size_t i = 0; i < marked; ++i) used_[esum_[done[i]]] = 0;
      for (auto e : inc_[v]) esum_[e] -= x;
    }
    label_[v] = 1;
    return false;
  }

  const Hypergraph& h_;
  std::vector<std::vector<std::uint32_t>> inc_;
  std::vector<Vertex> order_;
  std::vector<std::vector<std::uint32_t>> completes_;
  std::size_t max_edge_ = 0, max_size_ = 0;

  Label bound_ = 0;
  std::uint64_t* nodes_ = nullptr;
  std::uint64_t budget_ = 0;
  std::vector<char> used_;
  std::vector<std::uint64_t> esum_;
  std::vector<Label> label_;
};

inline std::size_t covered_vertices(const Hypergraph& h) {
  std::vector<char> hit(h.vertex_count(), 0);
  for (const Edge& e : h.edges())
    for (Vertex v : e) hit[v] = 1;
  return static_cast<std::size_t>(std::count(hit.begin(), hit.end(), 1));
}

}  // namespace detail

/// A distinguishing labeling with every label <= N, or nullopt if none exists.
inline std::optional<Labeling> decide_labeling(const Hypergraph& h, Label bound,
                                               std::uint64_t node_budget = SolveOptions{}.node_budget) {
  if (bound == 0) throw DomainError("label bound must be positive");
  if (h.edge_count() <= 1) return Labeling::all_ones(h.vertex_count());
  if (detail::counting_lower_bound(h) > bound) return std::nullopt;
  std::uint64_t nodes = 0;
  detail::LabelSearch search(h);
  auto found = search.run(bound, nodes, node_budget);
  if (found && !is_distinguishing(h, *found)) throw std::logic_error("search returned a colliding labeling");
  return found;
}

/// s(H): the least N admitting a distinguishing labeling in [N]^n.
/// On budget exhaustion the error carries [proven lower bound, 2^{n'-1}].
inline SolveResult exact_s(const Hypergraph& h, const SolveOptions& opt = {}) {
  const auto start = std::chrono::steady_clock::now();
  SolveResult out;
  out.start_bound = std::max(opt.lower_bound, detail::counting_lower_bound(h));
  if (h.edge_count() <= 1) {
    out.optimum = 1;
    out.witness = Labeling::all_ones(h.vertex_count());
    out.start_bound = 1;
    out.elapsed = std::chrono::steady_clock::now() - start;
    return out;
  }
  const std::size_t covered = detail::covered_vertices(h);
  const Label upper = covered >= 64 ? ~Label{0} : Label{1} << (covered - 1);
  detail::LabelSearch search(h);
  for (Label bound = out.start_bound;; ++bound) {
    std::optional<Labeling> found;
    try {
      found = search.run(bound, out.nodes_expanded, opt.node_budget);
    } catch (const BudgetExhausted&) {
      throw BudgetExhausted("exact search exhausted its node budget; s(H) in [" + std::to_string(bound) + ", " +
                                std::to_string(upper) + "]",
                            bound, upper);
    }
    if (found) {
      if (!is_distinguishing(h, *found)) throw std::logic_error("search returned a colliding labeling");
      out.optimum = bound;
      out.witness = std::move(*found);
      break;
    }
    if (bound >= upper) throw std::logic_error("no labeling found up to 2^{n-1}");
  }
  out.elapsed = std::chrono::steady_clock::now() - start;
  return out;
}

/// s*(G) = s(closed-neighborhood hypergraph of G).
inline SolveResult exact_s_star(const Graph& g, SolveOptions opt = {}) {
  if (g.edge_count() > 0) opt.lower_bound = std::max<Label>(opt.lower_bound, s_star_bounds(g).lower);
  return exact_s(closed_neighborhood_hypergraph(g).hypergraph, opt);
}

/// irr(H) = s(dual of H); the witness labels the edges of H.
inline SolveResult exact_irr(const Hypergraph& h, const SolveOptions& opt = {}) {
  return exact_s(dual(h).hypergraph, opt);
}

/// Brute force over all N^n labelings in lexicographic order (vertex 0 most
/// significant); returns the first distinguishing one.
inline std::optional<Labeling> oracle_enumerate(const Hypergraph& h, Label bound) {
  if (bound == 0) throw DomainError("label bound must be positive");
  const std::size_t n = h.vertex_count();
  if (static_cast<double>(n) * std::log10(static_cast<double>(bound)) > 8.0 + 1e-12)
    throw OracleTooLarge("N^n exceeds 10^8");
  std::vector<Label> f(n, 1);
  for (;;) {
    Labeling cand(f);
    if (is_distinguishing(h, cand)) return cand;
    std::size_t i = n;
    while (i > 0 && f[i - 1] == bound) f[--i] = 1;
    if (i == 0) return std::nullopt;
    ++f[i - 1];
  }
}

}  // namespace sumdist

#endif
