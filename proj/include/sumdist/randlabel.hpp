#ifndef SUMDIST_RANDLABEL_HPP
#define SUMDIST_RANDLABEL_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sumdist/hypergraph.hpp"
#include "sumdist/random.hpp"

// Las Vegas labelers: draw, verify, redraw. The two-step labeler first fixes
// the labels of "dangerously popular" vertices so that pairs whose
// difference lives mostly on them are already separated, then draws the rest.

namespace sumdist {

using Rational = boost::multiprecision::cpp_rational;

struct QuadraticResult {
  Labeling labeling;
  std::uint64_t attempts = 0;
};

/// One draw of i.i.d. uniform labels on [m^2]; not verified.
inline Labeling quadratic_attempt(const Hypergraph& h, Rng& rng) {
  const std::uint64_t m = h.edge_count();
  std::vector<Label> f(h.vertex_count());
  for (auto& x : f) x = rng.uniform_label(m * m);
  return Labeling(std::move(f));
}

/// Each attempt fails with probability at most C(m,2)/m^2 < 1/2.
inline QuadraticResult quadratic_random_labeling(const Hypergraph& h, std::uint64_t seed, std::uint64_t budget = 64) {
  if (h.edge_count() <= 1) return {Labeling::all_ones(h.vertex_count()), 0};
  Rng rng(seed);
  for (std::uint64_t attempt = 1; attempt <= budget; ++attempt) {
    Labeling f = quadratic_attempt(h, rng);
    if (is_distinguishing(h, f)) return {std::move(f), attempt};
  }
  throw BudgetExhausted("quadratic labeler failed " + std::to_string(budget) + " attempts");
}

struct TwoStepConfig {
  Rational c = 4;
  std::uint64_t k = 64;
  std::uint64_t p = 16;
  std::uint64_t seed = 0xD15C0;
  std::uint64_t step1_budget = 1000;
  std::uint64_t step2_budget = 1000;

  void validate() const {
    if (c <= 0) throw DomainError("C must be positive");
    if (!(k > p)) throw DomainError("need K > P");
    if (!(Rational(p) > c)) throw DomainError("need P > C");
    if (step1_budget == 0 || step2_budget == 0) throw DomainError("budgets must be positive");
  }

  /// N = ceil(m^2 / C).
  Label label_bound(std::uint64_t m) const {
    const Rational q = Rational(m * m) / c;
    boost::multiprecision::cpp_int num = boost::multiprecision::numerator(q), den = boost::multiprecision::denominator(q);
    boost::multiprecision::cpp_int ceil = (num + den - 1) / den;
    if (ceil == 0) ceil = 1;
    return ceil.convert_to<Label>();
  }

  /// Step 1 may leave at most floor(m^2 e^{-4C}) newly dangerous near-ties.
  std::uint64_t near_tie_allowance(std::uint64_t m) const {
    const long double cf = static_cast<long double>(c);
    return static_cast<std::uint64_t>(std::floor(static_cast<long double>(m * m) * std::exp(-4 * cf)));
  }
};

/// One unordered pair of edges (first < second).
struct PairInfo {
  std::uint32_t first = 0, second = 0;
  std::uint32_t difference_size = 0;  // |D(e,e')|, symmetric difference
  std::uint32_t unpopular_size = 0;   // |Z(e,e') u Z(e',e)| = |D \ S|
  bool dangerous = false;             // |D| <= K
  bool special = false;               // D subset of S
  bool newly_dangerous = false;       // not dangerous, not special, |D \ S| <= P
  std::int32_t special_class = -1;    // equal {X(e,e'), X(e',e)} share a class
  // Y(e,e') = (e \ e') n S and Y(e',e); kept for special and newly dangerous pairs
  std::vector<Vertex> y_first, y_second;
};

struct PairClassification {
  std::uint64_t k = 0, p = 0;
  std::vector<Vertex> popular;  // S, ascending
  std::vector<char> is_popular;
  std::vector<PairInfo> pairs;  // in order (0,1), (0,2), ..., (m-2, m-1)
  std::size_t special_classes = 0;
};

inline PairClassification classify_pairs(const Hypergraph& h, std::uint64_t k, std::uint64_t p) {
  if (!(k > p)) throw DomainError("need K > P");
  const std::size_t m = h.edge_count(), n = h.vertex_count();
  PairClassification cls;
  cls.k = k;
  cls.p = p;
  cls.is_popular.assign(n, 0);

  auto difference = [&](std::size_t i, std::size_t j, Edge& only_i, Edge& only_j) {
    only_i.clear();
    only_j.clear();
    const Edge &a = h.edge(i), &b = h.edge(j);
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(only_i));
    std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(only_j));
  };

  // dangerous-pair membership count per vertex
  std::vector<std::uint64_t> hits(n, 0);
  Edge xi, xj;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      difference(i, j, xi, xj);
      if (xi.size() + xj.size() > k) continue;
      for (Vertex v : xi) ++hits[v];
      for (Vertex v : xj) ++hits[v];
    }
  // popular iff hits >= m^2 / K^3, compared exactly
  const unsigned __int128 m2 = static_cast<unsigned __int128>(m) * m;
  const unsigned __int128 k3 = static_cast<unsigned __int128>(k) * k * k;
  for (Vertex v = 0; v < n; ++v)
    if (hits[v] > 0 && static_cast<unsigned __int128>(hits[v]) * k3 >= m2) {
      cls.is_popular[v] = 1;
      cls.popular.push_back(v);
    }
  if (m >= 2 && static_cast<unsigned __int128>(cls.popular.size()) > k3 * k)
    throw std::logic_error("more than K^4 dangerously popular vertices");

  std::map<std::pair<Edge, Edge>, std::int32_t> class_ids;
  cls.pairs.reserve(m * (m - (m > 0)) / 2);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      difference(i, j, xi, xj);
      PairInfo info;
      info.first = static_cast<std::uint32_t>(i);
      info.second = static_cast<std::uint32_t>(j);
      info.difference_size = static_cast<std::uint32_t>(xi.size() + xj.size());
      std::vector<Vertex> yi, yj;
      std::uint32_t unpopular = 0;
      auto split = [&](const Edge& x, std::vector<Vertex>& y) {
        for (Vertex v : x) {
          if (cls.is_popular[v]) y.push_back(v);
          else ++unpopular;
        }
      };
      split(xi, yi);
      split(xj, yj);
      info.unpopular_size = unpopular;
      info.dangerous = info.difference_size <= k;
      info.special = unpopular == 0;
      info.newly_dangerous = !info.dangerous && !info.special && unpopular <= p;
      if (info.special) {
        auto key = xi < xj ? std::make_pair(xi, xj) : std::make_pair(xj, xi);
        auto [it, fresh] = class_ids.emplace(std::move(key), static_cast<std::int32_t>(class_ids.size()));
        info.special_class = it->second;
      }
      if (info.special || info.newly_dangerous) {
        info.y_first = std::move(yi);
        info.y_second = std::move(yj);
      }
      cls.pairs.push_back(std::move(info));
    }
  cls.special_classes = class_ids.size();
  return cls;
}

/// Labels indexed by vertex; 0 marks "not assigned yet".
using PartialAssignment = std::vector<Label>;

/// Uniform labels on [N] for the popular vertices only.
inline PartialAssignment step_one(const Hypergraph& h, const PairClassification& cls, const TwoStepConfig& cfg,
                                  Rng& rng) {
  const Label bound = cfg.label_bound(h.edge_count());
  PartialAssignment f(h.vertex_count(), 0);
  for (Vertex v : cls.popular) f[v] = rng.uniform_label(bound);
  return f;
}

namespace detail {

inline std::int64_t y_sum(const std::vector<Vertex>& y, const PartialAssignment& f) {
  std::int64_t s = 0;
  for (Vertex v : y) s += static_cast<std::int64_t>(f[v]);
  return s;
}

// f(e,e') - f(e',e)
inline std::int64_t y_gap(const PairInfo& pi, const PartialAssignment& f) {
  return y_sum(pi.y_first, f) - y_sum(pi.y_second, f);
}

}  // namespace detail

struct StepOneReport {
  bool success = false;
  std::size_t special_collisions = 0;  // special pairs with f(e,e') == f(e',e)
  std::size_t near_ties = 0;           // newly dangerous pairs with |f(e,e') - f(e',e)| <= P N
  std::uint64_t allowance = 0;         // floor(m^2 e^{-4C})
};

inline StepOneReport step_one_successful(const Hypergraph& h, const PairClassification& cls,
                                         const TwoStepConfig& cfg, const PartialAssignment& f) {
  const std::uint64_t m = h.edge_count();
  const std::int64_t pn = static_cast<std::int64_t>(cls.p * cfg.label_bound(m));
  StepOneReport r;
  r.allowance = cfg.near_tie_allowance(m);
  for (const PairInfo& pi : cls.pairs) {
    if (pi.special) {
      if (detail::y_gap(pi, f) == 0) ++r.special_collisions;
    } else if (pi.newly_dangerous) {
      if (std::llabs(detail::y_gap(pi, f)) <= pn) ++r.near_ties;
    }
  }
  r.success = r.special_collisions == 0 && r.near_ties <= r.allowance;
  return r;
}

enum class PairType { a, b, c, d, e };

inline PairType pair_type(const PairInfo& pi, const PartialAssignment& f, std::int64_t pn) {
  if (pi.special) return PairType::a;
  if (pi.newly_dangerous) return std::llabs(detail::y_gap(pi, f)) > pn ? PairType::b : PairType::c;
  return pi.dangerous ? PairType::e : PairType::d;
}

struct TwoStepResult {
  Labeling labeling;
  Label label_bound = 0;
  std::size_t popular = 0;
  std::uint64_t step1_attempts = 0;
  std::uint64_t step1_successes = 0;
  std::uint64_t step2_attempts = 0;
  std::array<std::uint64_t, 5> census{};  // colliding pairs in failed Step 2 draws, by type (a)..(e)
};

class TwoStepExhausted : public BudgetExhausted {
 public:
  TwoStepExhausted(const std::string& what, TwoStepResult stats) : BudgetExhausted(what), stats_(std::move(stats)) {}
  const TwoStepResult& stats() const noexcept { return stats_; }

 private:
  TwoStepResult stats_;
};

/// Redraws Step 1 until it is successful, then redraws the remaining labels
/// up to step2_budget times; a Step 1 is abandoned only once its Step 2
/// budget is spent. Output is verified with max label <= ceil(m^2 / C).
inline TwoStepResult two_step_labeling(const Hypergraph& h, const TwoStepConfig& cfg) {
  cfg.validate();
  TwoStepResult out;
  const std::uint64_t m = h.edge_count();
  if (m <= 1) {
    out.labeling = Labeling::all_ones(h.vertex_count());
    out.label_bound = 1;
    return out;
  }
  const PairClassification cls = classify_pairs(h, cfg.k, cfg.p);
  const Label bound = cfg.label_bound(m);
  const std::int64_t pn = static_cast<std::int64_t>(cfg.p * bound);
  out.label_bound = bound;
  out.popular = cls.popular.size();
  Rng rng(cfg.seed);

  while (out.step1_attempts < cfg.step1_budget) {
    ++out.step1_attempts;
    PartialAssignment f = step_one(h, cls, cfg, rng);
    if (!step_one_successful(h, cls, cfg, f).success) continue;
    ++out.step1_successes;

    std::vector<std::int64_t> type_of(cls.pairs.size());
    for (std::size_t i = 0; i < cls.pairs.size(); ++i)
      type_of[i] = static_cast<std::int64_t>(pair_type(cls.pairs[i], f, pn));

    for (std::uint64_t tries = 0; tries < cfg.step2_budget; ++tries) {
      ++out.step2_attempts;
      for (Vertex v = 0; v < h.vertex_count(); ++v)
        if (!cls.is_popular[v]) f[v] = rng.uniform_label(bound);
      Labeling full(f);
      const auto sums = edge_sums(h, full);
      bool collided = false;
      for (std::size_t i = 0; i < cls.pairs.size(); ++i) {
        const PairInfo& pi = cls.pairs[i];
        const auto gap = static_cast<std::int64_t>(sums[pi.first]) - static_cast<std::int64_t>(sums[pi.second]);
        const auto type = static_cast<PairType>(type_of[i]);
        // Types (a) and (b) are separated by Step 1 alone.
        if (type == PairType::a && gap != detail::y_gap(pi, f))
          throw std::logic_error("special pair: sum gap differs from the Step 1 gap");
        if ((type == PairType::a || type == PairType::b) && gap == 0)
          throw std::logic_error("type (a)/(b) pair collided after a successful Step 1");
        if (gap == 0) {
          collided = true;
          ++out.census[type_of[i]];
        }
      }
      if (!collided) {
        if (!is_distinguishing(h, full) || full.max_label() > bound)
          throw std::logic_error("two-step output failed verification");
        out.labeling = std::move(full);
        return out;
      }
    }
  }
  throw TwoStepExhausted("two-step labeler exhausted its budgets (" + std::to_string(out.step1_attempts) +
                             " Step 1 draws, " + std::to_string(out.step1_successes) + " successful)",
                         out);
}

}  // namespace sumdist

#endif
