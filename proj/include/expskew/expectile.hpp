#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "expskew/distributions.hpp"
#include "expskew/errors.hpp"
#include "expskew/numerics.hpp"
#include "expskew/sample.hpp"

namespace expskew {

// Identification function I_alpha(x, y): positive part weighted by alpha,
// negative part by 1 - alpha. E I_alpha(e_X(alpha), X) = 0.
inline double identification(double alpha, double x, double y) noexcept {
  return y >= x ? alpha * (y - x) : -(1.0 - alpha) * (x - y);
}

namespace detail {

// Bracket for the first-order condition g(t) = alpha pi(t) - (1-alpha) E(t-X)_+.
inline std::pair<double, double> expectile_bracket(const DistributionSpec& d) {
  auto [lo, hi] = support(d);
  const double mu = mean(d);
  if (!std::isfinite(lo)) lo = quantile(d, 1e-12);
  if (!std::isfinite(hi)) hi = quantile(d, 1.0 - 1e-12);
  return {std::min(lo, mu), std::max(hi, mu)};
}

}  // namespace detail

// Theoretical alpha-expectile: the unique root of
//   g(t) = alpha * pi_X(t) - (1 - alpha) * E(t - X)_+ ,
// which is strictly decreasing with g'(t) = -[alpha (1-F(t)) + (1-alpha) F(t)].
inline double expectile(const DistributionSpec& d, double alpha) {
  detail::require_probability(alpha, "alpha");
  const double mu = mean(d);
  if (alpha == 0.5) return mu;

  auto g = [&](double t) { return alpha * stop_loss(d, t) - (1.0 - alpha) * lower_partial(d, t); };
  auto slope = [&](double t) {
    return -(alpha * survival(d, t) + (1.0 - alpha) * cdf(d, t));
  };

  auto [lo, hi] = detail::expectile_bracket(d);
  // Expand outward while the sign condition fails. Bounded supports never
  // need this; very small alpha on heavy tails occasionally does.
  for (int i = 0; i < 60 && g(lo) < 0.0; ++i) lo = mu - 2.0 * (mu - lo);
  for (int i = 0; i < 60 && g(hi) > 0.0; ++i) hi = mu + 2.0 * (hi - mu);
  if (g(lo) < 0.0 || g(hi) > 0.0) {
    throw numerical_error("expectile: root not bracketable for " + d.describe());
  }
  const double scale = mad(d);
  return numerics::solve_decreasing(g, slope, lo, hi, mu, 1e-12, scale);
}

namespace detail {

// The sorted sample as seen by the solver: either as is, or mirrored
// (y_(i) = -x_(n+1-i)), in which case its centred prefix sums are the
// negated top-down sums of the original.
struct SortedView {
  const Sample& s;
  bool mirrored;

  std::size_t size() const noexcept { return s.size(); }
  double at(std::size_t i) const noexcept {
    return mirrored ? -s.sorted()[s.size() - 1 - i] : s.sorted()[i];
  }
  double mean() const noexcept { return mirrored ? -s.mean() : s.mean(); }
  double prefix(std::size_t k) const noexcept {
    return mirrored ? -s.centred_suffix(k) : s.centred_prefix(k);
  }
  std::size_t count_at_most(double y) const noexcept {
    return mirrored ? s.size() - s.count_below(-y) : s.count_at_most(y);
  }
};

// Root of h(t) = (1/n) sum [up (X_i - t)_+ - down (t - X_i)_+] on a
// non-degenerate view; up + down = 1.
inline double solve_empirical_expectile(const SortedView& v, double up, double down) {
  const std::size_t n = v.size();
  const double xbar = v.mean();
  const double total = v.prefix(n);

  // h at a centred point y, with m = #{c_i <= y}.
  auto h_centred = [&](double y, std::size_t m) {
    const double pm = v.prefix(m);
    return up * ((total - pm) - static_cast<double>(n - m) * y) -
           down * (static_cast<double>(m) * y - pm);
  };
  auto h_at_index = [&](std::size_t k) {
    const double x = v.at(k);
    return h_centred(x - xbar, v.count_at_most(x));
  };

  // Largest k with h(x_(k)) >= 0; h(x_(0)) > 0 > h(x_(n-1)) here.
  std::size_t lo = 0;
  std::size_t hi = n - 1;
  while (hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (h_at_index(mid) >= 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const std::size_t m = v.count_at_most(v.at(lo));
  const double pm = v.prefix(m);
  const double y = (up * (total - pm) + down * pm) /
                   (up * static_cast<double>(n - m) + down * static_cast<double>(m));
  // Clamp against rounding at the segment ends.
  return std::clamp(xbar + y, v.at(lo), v.at(hi));
}

}  // namespace detail

// Empirical alpha-expectile, solved exactly.
//
// h(t) = (1/n) sum I_alpha(t, X_i) is continuous, piecewise linear, and
// strictly decreasing (constant samples aside). A binary search over the
// order statistics finds the segment [x_(k), x_(k+1)) holding the root; with
// m = #{X_i <= x_(k)} fixed on it, h is linear and
//   t - xbar = [alpha * (S - P_m) + (1 - alpha) * P_m] / [alpha (n - m) + (1 - alpha) m],
// where P_m sums the m smallest centred values and S sums all of them.
//
// For alpha > 1/2 the root is computed as -e_{-X}(1 - alpha) on the mirrored
// sample, so e_{-X}(alpha) == -e_X(1 - alpha) holds exactly whenever 1 - alpha
// is representable.
inline double empirical_expectile(const Sample& s, double alpha) {
  detail::require_probability(alpha, "alpha");
  if (s.is_degenerate()) return s.min();
  if (alpha == 0.5) return s.mean();
  if (alpha < 0.5) return detail::solve_empirical_expectile({s, false}, alpha, 1.0 - alpha);
  return -detail::solve_empirical_expectile({s, true}, 1.0 - alpha, alpha);
}

// e'_X(alpha) = E|X - e| / [(1-alpha) F(e) + alpha (1 - F(e))], e = e_X(alpha).
// Defined for continuous families only.
inline double expectile_derivative(const DistributionSpec& d, double alpha) {
  if (!d.is_continuous()) {
    throw unsupported_error("expectile_derivative requires a continuous cdf; got " +
                            d.describe());
  }
  const double e = expectile(d, alpha);
  const double abs_dev = stop_loss(d, e) + lower_partial(d, e);
  const double denom = (1.0 - alpha) * cdf(d, e) + alpha * survival(d, e);
  return abs_dev / denom;
}

// Omega ratio pi_X(t) / E(t - X)_+. Throws undefined_omega_error when t is
// at or below the essential infimum.
inline double omega_ratio(const DistributionSpec& d, double t) {
  const double down = lower_partial(d, t);
  if (!(down > 0.0)) {
    throw undefined_omega_error("omega ratio undefined: E(t - X)_+ = 0 at t = " +
                                std::to_string(t));
  }
  return stop_loss(d, t) / down;
}

// e(1-alpha) = location + half_distance + asymmetry.
struct ExpectileDecomposition {
  double location = 0.0;       // e(1/2), the mean
  double half_distance = 0.0;  // (e(1-alpha) - e(alpha)) / 2
  double asymmetry = 0.0;      // (e(1-alpha) + e(alpha) - 2 e(1/2)) / 2
};

namespace detail {

inline ExpectileDecomposition decompose(double lower, double centre, double upper) {
  return {centre, 0.5 * (upper - lower), 0.5 * ((upper - centre) - (centre - lower))};
}

}  // namespace detail

inline ExpectileDecomposition expectile_decomposition(const DistributionSpec& d, double alpha) {
  detail::require_lower_alpha(alpha);
  return detail::decompose(expectile(d, alpha), mean(d), expectile(d, 1.0 - alpha));
}

inline ExpectileDecomposition expectile_decomposition(const Sample& s, double alpha) {
  detail::require_lower_alpha(alpha);
  return detail::decompose(empirical_expectile(s, alpha), s.mean(),
                           empirical_expectile(s, 1.0 - alpha));
}

}  // namespace expskew
