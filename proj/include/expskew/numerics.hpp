#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include <boost/math/distributions/normal.hpp>
#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/sinh_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/erf.hpp>

#include "expskew/errors.hpp"

namespace expskew {
namespace numerics {

inline constexpr double inf = std::numeric_limits<double>::infinity();

inline double normal_pdf(double z) noexcept {
  return std::exp(-0.5 * z * z) / std::sqrt(2.0 * std::numbers::pi);
}

// Phi(z), accurate in both tails.
inline double normal_cdf(double z) {
  return 0.5 * boost::math::erfc(-z / std::numbers::sqrt2);
}

inline double normal_upper(double z) {
  return 0.5 * boost::math::erfc(z / std::numbers::sqrt2);
}

// z_q, the q-quantile of N(0,1).
inline double normal_quantile(double q) {
  detail::require_probability(q, "normal quantile level");
  return boost::math::quantile(boost::math::normal_distribution<double>(), q);
}

// Root of a nonincreasing function f on [lo, hi] with f(lo) >= 0 >= f(hi).
// Newton steps are taken from the current iterate whenever they land inside
// the bracket, otherwise the bracket is bisected. `slope` returns f'(t) (may
// be zero at kinks). Terminates once a step is below rel_tol * (|t| + scale).
template <class F, class DF>
double solve_decreasing(F&& f, DF&& slope, double lo, double hi, double start,
                        double rel_tol = 1e-12, double scale = 1.0) {
  double f_lo = f(lo);
  double f_hi = f(hi);
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  if (!(f_lo > 0.0 && f_hi < 0.0)) {
    throw numerical_error("solve_decreasing: root not bracketed in [" + std::to_string(lo) +
                          ", " + std::to_string(hi) + "]");
  }
  double t = (start > lo && start < hi) ? start : 0.5 * (lo + hi);
  for (int iter = 0; iter < 400; ++iter) {
    const double ft = f(t);
    if (ft == 0.0) return t;
    if (ft > 0.0) {
      lo = t;
    } else {
      hi = t;
    }
    const double d = slope(t);
    double next = 0.5 * (lo + hi);
    if (d < 0.0 && std::isfinite(d)) {
      const double newton = t - ft / d;
      if (newton > lo && newton < hi) next = newton;
    }
    const double step = std::abs(next - t);
    t = next;
    if (step <= rel_tol * (std::abs(t) + scale)) {
      // final refinement
      const double f2 = f(t);
      const double d2 = slope(t);
      if (f2 != 0.0 && d2 < 0.0) {
        const double refined = t - f2 / d2;
        if (refined >= lo && refined <= hi) t = refined;
      }
      return t;
    }
    if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(lo), std::abs(hi))) {
      return t;
    }
  }
  return t;
}

// Double-exponential quadrature on [a, b]: tanh-sinh on finite intervals,
// exp-sinh on half-lines and sinh-sinh on the real line. Integrable endpoint
// singularities (z^k with small k near a gamma origin) are handled without
// subdivision.
template <class F>
double integrate(F&& f, double a, double b, double rel_tol = 1e-12) {
  if (a == b) return 0.0;
  if (a > b) return -integrate(f, b, a, rel_tol);
  namespace q = boost::math::quadrature;
  double value = 0.0;
  if (std::isfinite(a) && std::isfinite(b)) {
    thread_local q::tanh_sinh<double> rule;
    value = rule.integrate([&f](double x, double) { return f(x); }, a, b, rel_tol);
  } else if (std::isfinite(a) || std::isfinite(b)) {
    thread_local q::exp_sinh<double> rule;
    value = rule.integrate(f, a, b, rel_tol);
  } else {
    thread_local q::sinh_sinh<double> rule;
    value = rule.integrate(f, rel_tol);
  }
  if (!std::isfinite(value)) {
    throw numerical_error("integrate: non-finite result");
  }
  return value;
}

inline std::vector<double> linspace(double lo, double hi, std::size_t n) {
  std::vector<double> out;
  out.reserve(n);
  if (n == 1) {
    out.push_back(lo);
    return out;
  }
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1));
  }
  return out;
}

// lo, lo+step, ... up to hi (inclusive within rounding).
inline std::vector<double> arange_inclusive(double lo, double hi, double step) {
  if (!(step > 0.0) || !(hi >= lo)) {
    throw domain_error("grid requires lo <= hi and step > 0");
  }
  const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
  std::vector<double> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(lo + step * static_cast<double>(i));
  return out;
}

}  // namespace numerics
}  // namespace expskew
