#ifndef SUMDIST_PROB_HPP
#define SUMDIST_PROB_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sumdist/error.hpp"
#include "sumdist/hypergraph.hpp"

// Exact distribution of X_1 + ... + X_l for i.i.d. X_i uniform on {1..N}.

namespace sumdist::prob {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Supports whose total count N^l needs more bits than this are tracked in
/// long double only.
inline constexpr double kExactBitLimit = 16384.0;
inline constexpr std::size_t kExactSupportLimit = std::size_t{1} << 20;
inline constexpr std::size_t kSupportLimit = 50'000'000;

struct Probability {
  long double value = 0;
  std::optional<Rational> exact;  // present whenever the Pmf was exact
};

class Pmf {
 public:
  /// Distribution of a single uniform summand on {1..sides}.
  explicit Pmf(std::uint64_t sides) : summands_(1), sides_(sides) {
    if (sides == 0) throw DomainError("uniform summands need N >= 1");
    probs_.assign(sides, 1.0L / static_cast<long double>(sides));
    exact_ = true;
    counts_.assign(sides, BigInt(1));
    total_ = sides;
  }

  std::uint64_t summands() const noexcept { return summands_; }
  std::uint64_t sides() const noexcept { return sides_; }
  std::int64_t min_sum() const noexcept { return static_cast<std::int64_t>(summands_); }
  std::int64_t max_sum() const noexcept { return static_cast<std::int64_t>(summands_ * sides_); }
  std::size_t support_size() const noexcept { return probs_.size(); }
  bool exact() const noexcept { return exact_; }

  /// Twice the mean, l(N+1); an integer even when the mean is not.
  std::int64_t twice_mean() const noexcept { return static_cast<std::int64_t>(summands_ * (sides_ + 1)); }

  long double probability(std::int64_t t) const {
    if (t < min_sum() || t > max_sum()) return 0;
    return probs_[static_cast<std::size_t>(t - min_sum())];
  }

  /// Number of the N^l outcomes with sum t (exact mode only).
  const BigInt& count(std::int64_t t) const {
    require_exact();
    static const BigInt zero = 0;
    if (t < min_sum() || t > max_sum()) return zero;
    return counts_[static_cast<std::size_t>(t - min_sum())];
  }

  const BigInt& total() const {
    require_exact();
    return total_;
  }

  Rational exact_probability(std::int64_t t) const { return Rational(count(t), total()); }

  const std::vector<long double>& probabilities() const noexcept { return probs_; }
  const std::vector<BigInt>& counts() const {
    require_exact();
    return counts_;
  }

  /// Smallest t attaining the maximum probability.
  std::int64_t argmax() const {
    if (exact_) {
      auto it = std::max_element(counts_.begin(), counts_.end());
      return min_sum() + (it - counts_.begin());
    }
    auto it = std::max_element(probs_.begin(), probs_.end());
    return min_sum() + (it - probs_.begin());
  }

  Probability window(std::int64_t lo, std::int64_t hi) const {
    lo = std::max(lo, min_sum());
    hi = std::min(hi, max_sum());
    Probability out;
    if (exact_) out.exact = Rational(0);
    if (lo > hi) return out;
    long double acc = 0;
    BigInt hits = 0;
    for (std::int64_t t = lo; t <= hi; ++t) {
      acc += probability(t);
      if (exact_) hits += counts_[static_cast<std::size_t>(t - min_sum())];
    }
    if (exact_) {
      out.exact = Rational(hits, total_);
      out.value = static_cast<long double>(*out.exact);
    } else {
      out.value = acc;
    }
    return out;
  }

  /// Distribution with one more summand, via a sliding-window convolution.
  Pmf with_extra_summand() const {
    const std::size_t old_len = probs_.size();
    const std::size_t len = old_len + static_cast<std::size_t>(sides_) - 1;
    if (len > kSupportLimit) throw TooLarge("support exceeds " + std::to_string(kSupportLimit) + " values");
    Pmf next(*this, summands_ + 1);
    const long double inv = 1.0L / static_cast<long double>(sides_);
    next.probs_.assign(len, 0);
    long double run = 0;
    for (std::size_t i = 0; i < len; ++i) {
      if (i < old_len) run += probs_[i];
      if (i >= sides_) run -= probs_[i - sides_];
      next.probs_[i] = std::max(run, 0.0L) * inv;
    }
    next.exact_ = exact_ && len <= kExactSupportLimit &&
                  static_cast<double>(next.summands_) * std::log2(static_cast<double>(sides_)) <= kExactBitLimit;
    if (next.exact_) {
      next.counts_.assign(len, BigInt(0));
      BigInt window = 0;
      for (std::size_t i = 0; i < len; ++i) {
        if (i < old_len) window += counts_[i];
        if (i >= sides_) window -= counts_[i - sides_];
        next.counts_[i] = window;
      }
      next.total_ = total_ * sides_;
    }
    return next;
  }

 private:
  Pmf(const Pmf& base, std::uint64_t summands) : summands_(summands), sides_(base.sides_) {}

  void require_exact() const {
    if (!exact_) throw DomainError("distribution is tracked in floating point only");
  }

  std::uint64_t summands_;
  std::uint64_t sides_;
  std::vector<long double> probs_;
  bool exact_ = false;
  std::vector<BigInt> counts_;
  BigInt total_;
};

/// Distribution of X_1 + ... + X_l, X_i i.i.d. uniform on {1..N}.
inline Pmf sum_pmf(std::uint64_t summands, std::uint64_t sides) {
  if (summands == 0) throw DomainError("need at least one summand");
  if (sides == 0) throw DomainError("uniform summands need N >= 1");
  if ((sides - 1) > 0 && summands > kSupportLimit / (sides - 1))
    throw TooLarge("support of l(N-1)+1 values exceeds the memory guard");
  Pmf pmf(sides);
  for (std::uint64_t k = 1; k < summands; ++k) pmf = pmf.with_extra_summand();
  return pmf;
}

inline Probability window_probability(std::uint64_t summands, std::uint64_t sides, std::int64_t lo, std::int64_t hi) {
  return sum_pmf(summands, sides).window(lo, hi);
}

/// Pr[|X - l(N+1)/2| >= l^{2/3} N]. The test |2t - l(N+1)|^3 >= 8 l^2 N^3 is
/// evaluated in integers so perfect cubes such as l = 8, 27 are exact.
inline Probability concentration_tail(const Pmf& pmf) {
  const BigInt threshold = BigInt(8) * pmf.summands() * pmf.summands() * BigInt(pmf.sides()) * pmf.sides() * pmf.sides();
  Probability out;
  long double acc = 0;
  BigInt hits = 0;
  for (std::int64_t t = pmf.min_sum(); t <= pmf.max_sum(); ++t) {
    const BigInt dev = BigInt(std::abs(2 * t - pmf.twice_mean()));
    if (dev * dev * dev < threshold) continue;
    acc += pmf.probability(t);
    if (pmf.exact()) hits += pmf.count(t);
  }
  if (pmf.exact()) {
    out.exact = Rational(hits, pmf.total());
    out.value = static_cast<long double>(*out.exact);
  } else {
    out.value = acc;
  }
  return out;
}

inline Probability concentration_tail(std::uint64_t summands, std::uint64_t sides) {
  return concentration_tail(sum_pmf(summands, sides));
}

struct Lemma3Margin {
  /// max_t Pr[X_1 + ... + X_{2l} = t] * e^{4C} * N / 5; at most 1 certifies the bound.
  long double margin = 0;
  long double max_probability = 0;
  std::int64_t argmax = 0;
  std::int64_t mean = 0;  // l(N+1), the mean of the 2l-term sum
};

inline Lemma3Margin lemma3_margin(std::uint64_t half_summands, std::uint64_t sides, long double c) {
  if (half_summands == 0) throw DomainError("l must be positive");
  if (!(c > 0)) throw DomainError("C must be positive");
  const Pmf pmf = sum_pmf(2 * half_summands, sides);
  Lemma3Margin out;
  out.argmax = pmf.argmax();
  out.mean = pmf.twice_mean() / 2;
  out.max_probability = pmf.exact() ? static_cast<long double>(pmf.exact_probability(out.argmax))
                                    : pmf.probability(out.argmax);
  out.margin = out.max_probability * std::exp(4 * c) * static_cast<long double>(sides) / 5;
  return out;
}

struct MergeCheck {
  bool conv1_holds = false;
  bool decrease_holds = false;
};

namespace detail {

// g(t) = (1-p)^t + t p (1-p)^{t-1} = (1-p)^{t-1} (1 + (t-1) p)
inline long double log_g(long double p, std::uint64_t t) {
  return static_cast<long double>(t - 1) * std::log1p(-p) + std::log1p(static_cast<long double>(t - 1) * p);
}

inline bool decrease_exact(const Rational& p, std::uint64_t t) {
  // g(t)^2 <= g(2)^t  <=>  (1-p)^{t-2} (1+(t-1)p)^2 <= (1+p)^t, scaled by den^t.
  const BigInt a = boost::multiprecision::numerator(p), b = boost::multiprecision::denominator(p);
  const BigInt lin = b + BigInt(t - 1) * a;
  const BigInt lhs = boost::multiprecision::pow(BigInt(b - a), static_cast<unsigned>(t - 2)) * lin * lin;
  const BigInt rhs = boost::multiprecision::pow(BigInt(b + a), static_cast<unsigned>(t));
  return lhs <= rhs;
}

}  // namespace detail

/// With g(t) = (1-p)^t + t p (1-p)^{t-1}:
///   conv1:    g(t1) g(t2) <= g(t1+1) g(t2-1)       (requires t1 <= t2 - 2)
///   decrease: g(t2)^{1/t2} <= g(2)^{1/2}
/// conv1 is decided exactly: both sides carry the factor (1-p)^{t1+t2-2}.
/// decrease is decided in log space and re-checked exactly when close.
inline MergeCheck merge_inequality_check(const Rational& p, std::uint64_t t1, std::uint64_t t2) {
  if (p <= 0 || p >= 1) throw DomainError("p must lie in (0,1)");
  if (t1 < 2) throw DomainError("t1 must be at least 2");
  if (t1 + 2 > t2) throw DomainError("conv1 needs t1 <= t2 - 2");
  MergeCheck out;
  auto lin = [&](std::uint64_t t) { return Rational(1) + Rational(t - 1) * p; };
  out.conv1_holds = lin(t1) * lin(t2) <= lin(t1 + 1) * lin(t2 - 1);

  const long double pf = static_cast<long double>(p);
  const long double lhs = detail::log_g(pf, t2) / static_cast<long double>(t2);
  const long double rhs = detail::log_g(pf, 2) / 2;
  if (std::fabs(lhs - rhs) > 1e-12L * (std::fabs(lhs) + std::fabs(rhs)) + 1e-300L)
    out.decrease_holds = lhs <= rhs;
  else
    out.decrease_holds = detail::decrease_exact(p, t2);
  return out;
}

/// Exact Pr[sum over X = sum over X'] for i.i.d. uniform labels on {1..N}.
/// Shared vertices cancel, so this is sum_t Pr[S_A = t] Pr[S_B = t] with
/// A = X \ X', B = X' \ X.
inline Rational exact_collision_probability(std::vector<Vertex> x, std::vector<Vertex> y, std::uint64_t sides) {
  if (sides == 0) throw DomainError("N must be positive");
  std::sort(x.begin(), x.end());
  x.erase(std::unique(x.begin(), x.end()), x.end());
  std::sort(y.begin(), y.end());
  y.erase(std::unique(y.begin(), y.end()), y.end());
  if (x == y) throw DomainError("the two vertex sets are equal");
  std::vector<Vertex> only_x, only_y, all;
  std::set_difference(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(only_x));
  std::set_difference(y.begin(), y.end(), x.begin(), x.end(), std::back_inserter(only_y));
  std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(all));
  if (static_cast<double>(all.size()) * std::log10(static_cast<double>(sides)) > 8.0 + 1e-12)
    throw TooLarge("N^|X u X'| exceeds 10^8");
  if (only_x.empty() || only_y.empty()) return Rational(0);  // one side strictly larger
  const Pmf a = sum_pmf(only_x.size(), sides), b = sum_pmf(only_y.size(), sides);
  BigInt hits = 0;
  for (std::int64_t t = std::max(a.min_sum(), b.min_sum()); t <= std::min(a.max_sum(), b.max_sum()); ++t)
    hits += a.count(t) * b.count(t);
  return Rational(hits, a.total() * b.total());
}

}  // namespace sumdist::prob

#endif
