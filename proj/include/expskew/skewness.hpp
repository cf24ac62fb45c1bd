#pragma once

// Scalar skewness measures and skewness functions for populations
// (DistributionSpec) and samples (Sample).
//
// Sample conventions:
//   quantile      x_(ceil(n p)), the left-continuous generalized inverse;
//   ecdf          right-continuous, (1/n) #{X_i <= x}; ties with xbar count;
//   moments       1/n central moments;
//   L-moments     unbiased probability-weighted-moment estimators;
//   S_n(t)        centred at the sample mean.
// Ratio measures on constant samples throw degenerate_input_error.

#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "expskew/distributions.hpp"
#include "expskew/errors.hpp"
#include "expskew/expectile.hpp"
#include "expskew/numerics.hpp"
#include "expskew/sample.hpp"

namespace expskew {

enum class Scaling { raw, normalized };

namespace detail {

inline double quantile_ratio(double lower, double centre, double upper) {
  const double spread = upper - lower;
  if (!(spread > 0.0)) {
    throw degenerate_input_error("quantile skewness: q(1-alpha) equals q(alpha)");
  }
  return ((upper - centre) - (centre - lower)) / spread;
}

inline double expectile_ratio(double lower, double centre, double upper, double alpha,
                              Scaling scaling) {
  const double spread = upper - lower;
  if (!(spread > 0.0)) {
    throw degenerate_input_error("expectile skewness: degenerate source");
  }
  const double raw = ((upper - centre) - (centre - lower)) / spread;
  return scaling == Scaling::raw ? raw : raw / (1.0 - 2.0 * alpha);
}

inline void require_non_degenerate(const Sample& s, const char* what) {
  if (s.is_degenerate()) {
    throw degenerate_input_error(std::string(what) + ": all observations are equal");
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Moment skewness gamma_M = E(X-mu)^3 / Var(X)^{3/2}

inline double moment_skewness(const DistributionSpec& d) { return third_standardized_moment(d); }

inline double moment_skewness(const Sample& s) {
  detail::require_non_degenerate(s, "moment skewness");
  double m2 = 0.0;
  double m3 = 0.0;
  for (double x : s.sorted()) {
    const double c = x - s.mean();
    m2 += c * c;
    m3 += c * c * c;
  }
  const double n = static_cast<double>(s.size());
  m2 /= n;
  m3 /= n;
  return m3 / std::pow(m2, 1.5);
}

// ---------------------------------------------------------------------------
// Quantile skewness b2(alpha); b1 = b2(1/4)

inline double quantile_skewness(const DistributionSpec& d, double alpha) {
  detail::require_lower_alpha(alpha);
  return detail::quantile_ratio(quantile(d, alpha), quantile(d, 0.5), quantile(d, 1.0 - alpha));
}

inline double quantile_skewness(const Sample& s, double alpha) {
  detail::require_lower_alpha(alpha);
  return detail::quantile_ratio(s.quantile(alpha), s.quantile(0.5), s.quantile(1.0 - alpha));
}

// ---------------------------------------------------------------------------
// Expectile skewness: raw s~2(alpha) bounded by 1 - 2 alpha, normalized
// s2(alpha) = s~2(alpha) / (1 - 2 alpha) in (-1, 1); s1 = s2(1/4).

inline double expectile_skewness(const DistributionSpec& d, double alpha,
                                 Scaling scaling = Scaling::normalized) {
  detail::require_lower_alpha(alpha);
  return detail::expectile_ratio(expectile(d, alpha), mean(d), expectile(d, 1.0 - alpha), alpha,
                                 scaling);
}

inline double expectile_skewness(const Sample& s, double alpha,
                                 Scaling scaling = Scaling::normalized) {
  detail::require_lower_alpha(alpha);
  detail::require_non_degenerate(s, "expectile skewness");
  return detail::expectile_ratio(empirical_expectile(s, alpha), s.mean(),
                                 empirical_expectile(s, 1.0 - alpha), alpha, scaling);
}

// ---------------------------------------------------------------------------
// s3 = 2 F(mu) - 1, the alpha -> 1/2 limit of s2.

inline double tajuddin_s3(const DistributionSpec& d) { return 2.0 * cdf(d, mean(d)) - 1.0; }

inline double tajuddin_s3(const Sample& s) { return 2.0 * s.ecdf(s.mean()) - 1.0; }

// ---------------------------------------------------------------------------
// L-skewness tau3 = lambda3 / lambda2.
//
// Population: lambda2 = int F(1-F) dz and lambda3 = int F(1-F)(2F-1) dz,
// integrated over the support of the standard variate (sign flipped for a
// reflected spec). These are the order-statistic integrals of tau3 after
// the substitution u = F(z), and avoid the endpoint singularities of the
// quantile function.

inline double l_skewness(const DistributionSpec& d) {
  double l2 = 0.0;
  double l3 = 0.0;
  if (!d.is_continuous()) {
    const double p = d.shape();
    l2 = p * (1.0 - p);
    l3 = p * (1.0 - p) * (1.0 - 2.0 * p);
  } else {
    const auto [lo, hi] = detail::std_support(d);
    const double med = detail::std_quantile(d, 0.5);
    auto w2 = [&d](double z) {
      const double F = detail::std_cdf(d, z);
      const double S = detail::std_sf(d, z);
      return F * S;
    };
    auto w3 = [&d](double z) {
      const double F = detail::std_cdf(d, z);
      const double S = detail::std_sf(d, z);
      return F * S * (F - S);
    };
    l2 = numerics::integrate(w2, lo, med) + numerics::integrate(w2, med, hi);
    l3 = numerics::integrate(w3, lo, med) + numerics::integrate(w3, med, hi);
  }
  const double tau = l3 / l2;
  return d.scale() > 0.0 ? tau : -tau;
}

inline double l_skewness(const Sample& s) {
  if (s.size() < 3) throw degenerate_input_error("L-skewness needs at least 3 observations");
  detail::require_non_degenerate(s, "L-skewness");
  const auto x = s.sorted();
  const double n = static_cast<double>(s.size());
  double b1 = 0.0;
  double b2 = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double c = x[i] - s.mean();
    const double j = static_cast<double>(i);
    b1 += j / (n - 1.0) * c;
    b2 += j * (j - 1.0) / ((n - 1.0) * (n - 2.0)) * c;
  }
  b1 /= n;
  b2 /= n;
  // b0 = 0 on centred values.
  const double l2 = 2.0 * b1;
  const double l3 = 6.0 * b2 - 6.0 * b1;
  return l3 / l2;
}

// ---------------------------------------------------------------------------
// Skewness function S_X(t) = (pi(mu+t) - pi(mu-t)) / t + 1
//                          = (pi(mu+t) - E(mu-t-X)_+) / t.

inline double skewness_function(const DistributionSpec& d, double t) {
  detail::require_positive_t(t);
  const double mu = mean(d);
  return (stop_loss(d, mu + t) - lower_partial(d, mu - t)) / t;
}

inline double skewness_function(const Sample& s, double t) {
  detail::require_positive_t(t);
  const double xbar = s.mean();
  return (s.stop_loss(xbar + t) - s.lower_partial(xbar - t)) / t;
}

// (1/t) int_{mu-t}^{mu+t} F(z) dz - 1, by quadrature; split at atoms and
// support endpoints so the integrand is smooth on every piece.
inline double skewness_function_by_integral(const DistributionSpec& d, double t) {
  detail::require_positive_t(t);
  const double mu = mean(d);
  const double a = mu - t;
  const double b = mu + t;
  std::vector<double> cuts{a};
  const auto [lo, hi] = support(d);
  for (double c : {lo, hi, mu}) {
    if (std::isfinite(c) && c > a && c < b) cuts.push_back(c);
  }
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  double area = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (!d.is_continuous()) {
      area += (cuts[i + 1] - cuts[i]) * cdf(d, 0.5 * (cuts[i] + cuts[i + 1]));
    } else {
      area += cdf_integral(d, cuts[i], cuts[i + 1]);
    }
  }
  return area / t - 1.0;
}

// Scale-invariant version S~_X(t) = S_X(t * delta_X), delta_X the MAD.
inline double scaled_skewness_function(const DistributionSpec& d, double t) {
  detail::require_positive_t(t);
  return skewness_function(d, t * mad(d));
}

inline double scaled_skewness_function(const Sample& s, double t) {
  detail::require_positive_t(t);
  detail::require_non_degenerate(s, "scaled skewness function");
  return skewness_function(s, t * s.mad());
}

// Omega_X(mu + t) * Omega_X(mu - t): >= 1 for all t iff right-skewed in the
// expectile sense, identically 1 iff symmetric.
inline double omega_product(const DistributionSpec& d, double t) {
  detail::require_positive_t(t);
  const double mu = mean(d);
  return omega_ratio(d, mu + t) * omega_ratio(d, mu - t);
}

// ---------------------------------------------------------------------------
// Report

struct SkewnessReport {
  using Curve = std::vector<std::pair<double, double>>;

  std::string source;
  std::optional<double> gamma_m;
  std::string gamma_m_note;  // reason when gamma_m is absent
  Curve b2;
  Curve s2_raw;
  Curve s2;
  double s3 = 0.0;
  double tau3 = 0.0;
  Curve s_function;
  Curve s_function_scaled;
};

namespace detail {

inline std::string source_name(const DistributionSpec& d) { return d.describe(); }
inline std::string source_name(const Sample& s) {
  return "sample(n=" + std::to_string(s.size()) + ")";
}

}  // namespace detail

// Evaluates every measure on the given alpha and t grids. A population
// moment skewness that does not exist (student_t, dof <= 3) is left empty
// with a note; every other error propagates.
template <class Source>
SkewnessReport skewness_report(const Source& src, const std::vector<double>& alphas,
                               const std::vector<double>& ts) {
  SkewnessReport r;
  r.source = detail::source_name(src);
  try {
    r.gamma_m = moment_skewness(src);
  } catch (const domain_error& e) {
    r.gamma_m_note = e.what();
  }
  for (double a : alphas) {
    r.b2.emplace_back(a, quantile_skewness(src, a));
    r.s2_raw.emplace_back(a, expectile_skewness(src, a, Scaling::raw));
    r.s2.emplace_back(a, expectile_skewness(src, a, Scaling::normalized));
  }
  r.s3 = tajuddin_s3(src);
  r.tau3 = l_skewness(src);
  for (double t : ts) {
    r.s_function.emplace_back(t, skewness_function(src, t));
    r.s_function_scaled.emplace_back(t, scaled_skewness_function(src, t));
  }
  return r;
}

}  // namespace expskew
