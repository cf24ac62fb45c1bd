#pragma once

// Plug-in asymptotic inference for the empirical expectile skewness
// s2_n(alpha) and the empirical skewness function S_n(t).

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "expskew/errors.hpp"
#include "expskew/expectile.hpp"
#include "expskew/numerics.hpp"
#include "expskew/sample.hpp"
#include "expskew/skewness.hpp"

namespace expskew {

// estimate +- z_{(1+level)/2} * std_error / sqrt(n). std_error is the
// asymptotic standard deviation of sqrt(n) (estimate - target).
struct IntervalEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  double level = 0.0;
  std::size_t n = 0;

  double halfwidth() const noexcept { return 0.5 * (upper - lower); }
};

// Acceptance region +- band_halfwidth for the statistic under symmetry.
struct SymmetryBand {
  double band_halfwidth = 0.0;
  double statistic = 0.0;
  bool inside = true;
  double level = 0.0;
};

// Which expression to use for the asymptotic variance of s2_n(alpha).
//
// delta_method: the quadratic form grad' Sigma grad of the delta method,
//   with cross term 2 A(a) A(1-a) eta(a, 1-a).
// single_cross_term: the same sum with coefficient 1 on that cross term.
//   Kept for comparison only; it underestimates the variance badly and is
//   often negative (see the calibration test).
enum class VarianceForm { delta_method, single_cross_term };

struct IntervalOptions {
  VarianceForm form = VarianceForm::delta_method;
  bool clip_to_range = false;  // clip s2 limits to [-1, 1]
};

namespace detail {

inline void require_level(double level) {
  if (!(level > 0.0 && level < 1.0)) {
    throw domain_error("confidence level must lie in (0,1), got " + std::to_string(level));
  }
}

inline double two_sided_z(double level) { return numerics::normal_quantile(0.5 + 0.5 * level); }

inline void require_size(const Sample& s, std::size_t min_n, const char* what) {
  if (s.size() < min_n) {
    throw degenerate_input_error(std::string(what) + " needs at least " + std::to_string(min_n) +
                                 " observations");
  }
}

inline IntervalEstimate make_interval(double estimate, double sd, double level, std::size_t n) {
  const double half = two_sided_z(level) * sd / std::sqrt(static_cast<double>(n));
  return {estimate, sd, estimate - half, estimate + half, level, n};
}

inline SymmetryBand make_band(double statistic, double sd, double level, std::size_t n) {
  const double half = two_sided_z(level) * sd / std::sqrt(static_cast<double>(n));
  return {half, statistic, std::abs(statistic) <= half, level};
}

}  // namespace detail

// eta_n(tau1, tau2) = (1/n) sum I_tau1(e_n(tau1), X_i) I_tau2(e_n(tau2), X_i)
inline double eta_hat(const Sample& s, double tau1, double tau2) {
  detail::require_probability(tau1, "tau1");
  detail::require_probability(tau2, "tau2");
  detail::require_size(s, 2, "eta_hat");
  const double e1 = empirical_expectile(s, tau1);
  const double e2 = empirical_expectile(s, tau2);
  double sum = 0.0;
  for (double x : s.sorted()) sum += identification(tau1, e1, x) * identification(tau2, e2, x);
  return sum / static_cast<double>(s.size());
}

// A_n(tau) = (2 1{tau < 1/2} - 1) (e_n(1-tau) - xbar) / (tau + F_n(e_n(tau)) (1 - 2 tau))
inline double a_hat(const Sample& s, double tau) {
  detail::require_probability(tau, "tau");
  detail::require_size(s, 2, "a_hat");
  const double sign = tau < 0.5 ? 1.0 : -1.0;
  const double denom = tau + s.ecdf(empirical_expectile(s, tau)) * (1.0 - 2.0 * tau);
  if (!(denom > 0.0)) throw numerical_error("a_hat: vanishing denominator");
  return sign * (empirical_expectile(s, 1.0 - tau) - s.mean()) / denom;
}

// Plug-in estimate of the asymptotic variance sigma^2_alpha of
// sqrt(n) (s2_n(alpha) - s2(alpha)).
inline double sigma_alpha_sq_hat(const Sample& s, double alpha,
                                 VarianceForm form = VarianceForm::delta_method) {
  detail::require_lower_alpha(alpha);
  detail::require_size(s, 3, "sigma_alpha_sq_hat");
  detail::require_non_degenerate(s, "sigma_alpha_sq_hat");

  const double lo = empirical_expectile(s, alpha);
  const double hi = empirical_expectile(s, 1.0 - alpha);
  const double xbar = s.mean();

  // Empirical second moments of the identification scores at alpha, 1/2, 1-alpha.
  double eta_ll = 0.0, eta_lm = 0.0, eta_lh = 0.0, eta_mm = 0.0, eta_mh = 0.0, eta_hh = 0.0;
  for (double x : s.sorted()) {
    const double il = identification(alpha, lo, x);
    const double im = identification(0.5, xbar, x);
    const double ih = identification(1.0 - alpha, hi, x);
    eta_ll += il * il;
    eta_lm += il * im;
    eta_lh += il * ih;
    eta_mm += im * im;
    eta_mh += im * ih;
    eta_hh += ih * ih;
  }
  const double n = static_cast<double>(s.size());
  eta_ll /= n;
  eta_lm /= n;
  eta_lh /= n;
  eta_mm /= n;
  eta_mh /= n;
  eta_hh /= n;

  const double a_lo = (hi - xbar) / (alpha + s.ecdf(lo) * (1.0 - 2.0 * alpha));
  const double a_hi = -(lo - xbar) / ((1.0 - alpha) + s.ecdf(hi) * (2.0 * alpha - 1.0));

  const double d = hi - lo;
  const double cross = form == VarianceForm::delta_method ? 2.0 : 1.0;
  const double bracket = 4.0 * eta_mm / (d * d) -
                         4.0 * (a_lo * eta_lm + a_hi * eta_mh) / (d * d * d) +
                         (a_lo * a_lo * eta_ll + cross * a_lo * a_hi * eta_lh + a_hi * a_hi * eta_hh) /
                             (d * d * d * d);
  const double q = 1.0 - 2.0 * alpha;
  return 4.0 / (q * q) * bracket;
}

inline IntervalEstimate s2_confidence_interval(const Sample& s, double alpha, double level,
                                               const IntervalOptions& opt = {}) {
  detail::require_level(level);
  const double v = sigma_alpha_sq_hat(s, alpha, opt.form);
  if (!(v >= 0.0)) {
    throw numerical_error("s2 interval: negative variance estimate " + std::to_string(v));
  }
  auto ci = detail::make_interval(expectile_skewness(s, alpha), std::sqrt(v), level, s.size());
  if (opt.clip_to_range) {
    ci.lower = std::max(ci.lower, -1.0);
    ci.upper = std::min(ci.upper, 1.0);
  }
  return ci;
}

inline SymmetryBand s2_symmetry_band(const Sample& s, double alpha, double level,
                                     const IntervalOptions& opt = {}) {
  detail::require_level(level);
  const double v = sigma_alpha_sq_hat(s, alpha, opt.form);
  if (!(v >= 0.0)) {
    throw numerical_error("s2 band: negative variance estimate " + std::to_string(v));
  }
  return detail::make_band(expectile_skewness(s, alpha), std::sqrt(v), level, s.size());
}

// Plug-in estimate of sigma^2_t, the asymptotic variance of
// sqrt(n) (S_n(t) - S(t)):
//   (1/(n t^2)) sum (a_i + (X_i - xbar) p_t)^2 - ((1/(n t)) sum a_i)^2,
// a_i = (X_i - xbar - t)_+ - (X_i - xbar + t)_+, p_t = (1/n) #{xbar - t < X_i <= xbar + t}.
inline double sigma_t_sq_hat(const Sample& s, double t) {
  detail::require_positive_t(t);
  detail::require_size(s, 2, "sigma_t_sq_hat");
  const double xbar = s.mean();
  const double n = static_cast<double>(s.size());
  const double p_t =
      static_cast<double>(s.count_at_most(xbar + t) - s.count_at_most(xbar - t)) / n;
  double sum_sq = 0.0;
  double sum = 0.0;
  for (double x : s.sorted()) {
    const double c = x - xbar;
    const double a = std::max(c - t, 0.0) - std::max(c + t, 0.0);
    const double v = a + c * p_t;
    sum_sq += v * v;
    sum += a;
  }
  const double mean_a = sum / (n * t);
  return std::max(sum_sq / (n * t * t) - mean_a * mean_a, 0.0);
}

inline IntervalEstimate sfunc_confidence_interval(const Sample& s, double t, double level) {
  detail::require_level(level);
  return detail::make_interval(skewness_function(s, t), std::sqrt(sigma_t_sq_hat(s, t)), level,
                               s.size());
}

inline SymmetryBand sfunc_symmetry_band(const Sample& s, double t, double level) {
  detail::require_level(level);
  return detail::make_band(skewness_function(s, t), std::sqrt(sigma_t_sq_hat(s, t)), level,
                           s.size());
}

// One row of an exported curve: the interval and the symmetry band at one
// grid point.
struct CurvePoint {
  double param = 0.0;
  double estimate = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  double band_halfwidth = 0.0;
  bool inside = true;
};

inline std::vector<CurvePoint> s2_curve(const Sample& s, const std::vector<double>& alphas,
                                        double level, const IntervalOptions& opt = {}) {
  std::vector<CurvePoint> out;
  out.reserve(alphas.size());
  for (double a : alphas) {
    const auto ci = s2_confidence_interval(s, a, level, opt);
    const auto band = s2_symmetry_band(s, a, level, opt);
    out.push_back({a, ci.estimate, ci.lower, ci.upper, band.band_halfwidth, band.inside});
  }
  return out;
}

inline std::vector<CurvePoint> sfunc_curve(const Sample& s, const std::vector<double>& ts,
                                           double level) {
  std::vector<CurvePoint> out;
  out.reserve(ts.size());
  for (double t : ts) {
    const auto ci = sfunc_confidence_interval(s, t, level);
    const auto band = sfunc_symmetry_band(s, t, level);
    out.push_back({t, ci.estimate, ci.lower, ci.upper, band.band_halfwidth, band.inside});
  }
  return out;
}

}  // namespace expskew
