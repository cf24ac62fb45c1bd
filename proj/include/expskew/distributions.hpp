#pragma once

// Parametric families used as population sources.
//
// Every DistributionSpec is an affine image X = location + scale * Z of a
// standard variate Z of its family:
//
//   normal(mean, variance)        Z ~ N(0,1)
//   gamma(shape k, scale theta)   Z ~ Gamma(k, 1)
//   lognormal(log-mean, log-var)  Z ~ LN(0, log-var), scale = exp(log-mean)
//   student_t(dof)                Z ~ t_dof
//   exponential(rate)             Z ~ Exp(1), scale = 1/rate
//   uniform(lower, upper)         Z ~ U(0,1)
//   bernoulli(p)                  Z ~ Bin(1, p)
//
// A negative scale (reflection) is allowed for continuous families only;
// reflecting a bernoulli spec yields bernoulli(1-p) with positive scale.
//
// The stop-loss transform pi(t) = E(X-t)_+ and the lower partial moment
// E(t-X)_+ have closed forms for every family and are evaluated separately,
// so neither is obtained by cancellation from the other.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/math/distributions/gamma.hpp>
#include <boost/math/distributions/students_t.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "expskew/errors.hpp"
#include "expskew/numerics.hpp"
#include "expskew/rng.hpp"
#include "expskew/sample.hpp"

namespace expskew {

enum class Family { normal, gamma, lognormal, student_t, exponential, uniform, bernoulli };

inline const char* family_name(Family f) noexcept {
  switch (f) {
    case Family::normal: return "normal";
    case Family::gamma: return "gamma";
    case Family::lognormal: return "lognormal";
    case Family::student_t: return "student_t";
    case Family::exponential: return "exponential";
    case Family::uniform: return "uniform";
    case Family::bernoulli: return "bernoulli";
  }
  return "unknown";
}

class DistributionSpec {
 public:
  static DistributionSpec normal(double mean, double variance) {
    require(std::isfinite(mean), "normal mean must be finite");
    require(variance > 0.0 && std::isfinite(variance), "normal variance must be positive");
    return {Family::normal, 0.0, mean, std::sqrt(variance)};
  }

  static DistributionSpec gamma(double shape, double scale) {
    require(shape > 0.0 && std::isfinite(shape), "gamma shape must be positive");
    require(scale > 0.0 && std::isfinite(scale), "gamma scale must be positive");
    return {Family::gamma, shape, 0.0, scale};
  }

  static DistributionSpec lognormal(double log_mean, double log_variance) {
    require(std::isfinite(log_mean), "lognormal log-mean must be finite");
    require(log_variance > 0.0 && log_variance < 700.0,
            "lognormal log-variance must lie in (0, 700)");
    return {Family::lognormal, std::sqrt(log_variance), 0.0, std::exp(log_mean)};
  }

  // Requires dof > 1 (finite mean).
  static DistributionSpec student_t(double dof) {
    require(dof > 1.0 && std::isfinite(dof), "student_t requires dof > 1 (finite mean)");
    return {Family::student_t, dof, 0.0, 1.0};
  }

  static DistributionSpec exponential(double rate) {
    require(rate > 0.0 && std::isfinite(rate), "exponential rate must be positive");
    return {Family::exponential, 0.0, 0.0, 1.0 / rate};
  }

  static DistributionSpec uniform(double lower, double upper) {
    require(std::isfinite(lower) && std::isfinite(upper) && lower < upper,
            "uniform requires finite lower < upper");
    return {Family::uniform, 0.0, lower, upper - lower};
  }

  static DistributionSpec bernoulli(double p) {
    require(p > 0.0 && p < 1.0, "bernoulli requires p in (0,1)");
    return {Family::bernoulli, p, 0.0, 1.0};
  }

  Family family() const noexcept { return family_; }
  // Shape of the standard variate: gamma k, lognormal sigma, t dof,
  // bernoulli p; zero for the other families.
  double shape() const noexcept { return shape_; }
  double location() const noexcept { return location_; }
  double scale() const noexcept { return scale_; }

  bool is_continuous() const noexcept { return family_ != Family::bernoulli; }

  // Law of c * X + d.
  DistributionSpec affine(double c, double d) const {
    require(c != 0.0 && std::isfinite(c) && std::isfinite(d),
            "affine map requires finite c != 0 and finite d");
    DistributionSpec out = *this;
    out.location_ = c * location_ + d;
    out.scale_ = c * scale_;
    if (family_ == Family::bernoulli && out.scale_ < 0.0) {
      out.location_ += out.scale_;
      out.scale_ = -out.scale_;
      out.shape_ = 1.0 - shape_;
    }
    return out;
  }

  DistributionSpec reflected() const { return affine(-1.0, 0.0); }

  // Inline-spec rendering (family:key=value,...). Affine images outside the
  // plain family are rendered as the standard variate followed by
  // "*scale+location".
  std::string describe() const {
    std::ostringstream os;
    os.precision(12);
    os << family_name(family_) << ':';
    const bool plain = location_ == 0.0 && scale_ > 0.0;
    switch (family_) {
      case Family::normal:
        os << "mean=" << location_ << ",variance=" << scale_ * scale_;
        return os.str();
      case Family::uniform:
        os << "lower=" << std::min(location_, location_ + scale_)
           << ",upper=" << std::max(location_, location_ + scale_);
        return os.str();
      case Family::gamma:
        os << "shape=" << shape_ << ",scale=" << (plain ? scale_ : 1.0);
        break;
      case Family::lognormal:
        os << "meanlog=" << (plain ? std::log(scale_) : 0.0) << ",varlog=" << shape_ * shape_;
        break;
      case Family::exponential: os << "rate=" << (plain ? 1.0 / scale_ : 1.0); break;
      case Family::student_t:
        os << "df=" << shape_;
        if (location_ == 0.0 && std::abs(scale_) == 1.0) return os.str();
        os << '*' << scale_ << '+' << location_;
        return os.str();
      case Family::bernoulli:
        os << "p=" << shape_;
        if (location_ == 0.0 && scale_ == 1.0) return os.str();
        os << '*' << scale_ << '+' << location_;
        return os.str();
    }
    if (!plain) os << '*' << scale_ << '+' << location_;
    return os.str();
  }

  friend bool operator==(const DistributionSpec&, const DistributionSpec&) = default;

 private:
  DistributionSpec(Family f, double shape, double location, double scale)
      : family_(f), shape_(shape), location_(location), scale_(scale) {}

  static void require(bool ok, const char* what) {
    if (!ok) throw domain_error(what);
  }

  Family family_;
  double shape_;
  double location_;
  double scale_;
};

namespace detail {

// Primitives of the standard variate Z of each family.

inline double std_mean(const DistributionSpec& d) {
  switch (d.family()) {
    case Family::normal: return 0.0;
    case Family::gamma: return d.shape();
    case Family::lognormal: return std::exp(0.5 * d.shape() * d.shape());
    case Family::student_t: return 0.0;
    case Family::exponential: return 1.0;
    case Family::uniform: return 0.5;
    case Family::bernoulli: return d.shape();
  }
  return 0.0;
}

inline double std_variance(const DistributionSpec& d) {
  const double k = d.shape();
  switch (d.family()) {
    case Family::normal: return 1.0;
    case Family::gamma: return k;
    case Family::lognormal: return std::expm1(k * k) * std::exp(k * k);
    case Family::student_t:
      if (k <= 2.0) throw domain_error("student_t variance requires dof > 2");
      return k / (k - 2.0);
    case Family::exponential: return 1.0;
    case Family::uniform: return 1.0 / 12.0;
    case Family::bernoulli: return k * (1.0 - k);
  }
  return 0.0;
}

inline double std_skewness(const DistributionSpec& d) {
  const double k = d.shape();
  switch (d.family()) {
    case Family::normal: return 0.0;
    case Family::gamma: return 2.0 / std::sqrt(k);
    case Family::lognormal: return (std::exp(k * k) + 2.0) * std::sqrt(std::expm1(k * k));
    case Family::student_t:
      if (k <= 3.0) throw domain_error("student_t moment skewness requires dof > 3");
      return 0.0;
    case Family::exponential: return 2.0;
    case Family::uniform: return 0.0;
    case Family::bernoulli: return (1.0 - 2.0 * k) / std::sqrt(k * (1.0 - k));
  }
  return 0.0;
}

inline double t_pdf(double nu, double z) {
  const double log_c = std::lgamma(0.5 * (nu + 1.0)) - std::lgamma(0.5 * nu) -
                       0.5 * std::log(nu * std::numbers::pi);
  return std::exp(log_c - 0.5 * (nu + 1.0) * std::log1p(z * z / nu));
}

// P(Z <= z)
inline double std_cdf(const DistributionSpec& d, double z) {
  const double k = d.shape();
  switch (d.family()) {
    case Family::normal: return numerics::normal_cdf(z);
    case Family::gamma:
      return z <= 0.0 ? 0.0 : boost::math::gamma_p(k, z);
    case Family::lognormal:
      return z <= 0.0 ? 0.0 : numerics::normal_cdf(std::log(z) / k);
    case Family::student_t:
      return boost::math::cdf(boost::math::students_t_distribution<double>(k), z);
    case Family::exponential: return z <= 0.0 ? 0.0 : -std::expm1(-z);
    case Family::uniform: return std::clamp(z, 0.0, 1.0);
    case Family::bernoulli: return z < 0.0 ? 0.0 : (z < 1.0 ? 1.0 - k : 1.0);
  }
  return 0.0;
}

// P(Z > z), accurate in the upper tail.
inline double std_sf(const DistributionSpec& d, double z) {
  const double k = d.shape();
  switch (d.family()) {
    case Family::normal: return numerics::normal_upper(z);
    case Family::gamma: return z <= 0.0 ? 1.0 : boost::math::gamma_q(k, z);
    case Family::lognormal:
      return z <= 0.0 ? 1.0 : numerics::normal_upper(std::log(z) / k);
    case Family::student_t:
      return boost::math::cdf(
          boost::math::complement(boost::math::students_t_distribution<double>(k), z));
    case Family::exponential: return z <= 0.0 ? 1.0 : std::exp(-z);
    case Family::uniform: return 1.0 - std::clamp(z, 0.0, 1.0);
    case Family::bernoulli: return 1.0 - std_cdf(d, z);
  }
  return 0.0;
}

// Generalized inverse inf{z : P(Z <= z) >= p}.
inline double std_quantile(const DistributionSpec& d, double p) {
  const double k = d.shape();
  switch (d.family()) {
    case Family::normal: return numerics::normal_quantile(p);
    case Family::gamma: return boost::math::gamma_p_inv(k, p);
    case Family::lognormal: return std::exp(k * numerics::normal_quantile(p));
    case Family::student_t:
      return boost::math::quantile(boost::math::students_t_distribution<double>(k), p);
    case Family::exponential: return -std::log1p(-p);
    case Family::uniform: return p;
    case Family::bernoulli: return p <= 1.0 - k ? 0.0 : 1.0;
  }
  return 0.0;
}

// z with P(Z > z) = q, for continuous families.
inline double std_upper_quantile(const DistributionSpec& d, double q) {
  const double k = d.shape();
  switch (d.family()) {
    case Family::normal: return -numerics::normal_quantile(q);
    case Family::gamma: return boost::math::gamma_q_inv(k, q);
    case Family::lognormal: return std::exp(-k * numerics::normal_quantile(q));
    case Family::student_t:
      return -boost::math::quantile(boost::math::students_t_distribution<double>(k), q);
    case Family::exponential: return -std::log(q);
    case Family::uniform: return 1.0 - q;
    case Family::bernoulli: return std_quantile(d, 1.0 - q);
  }
  return 0.0;
}

// E(Z - z)_+
inline double std_upper_partial(const DistributionSpec& d, double z) {
  const double k = d.shape();
  switch (d.family()) {
    case Family::normal: return numerics::normal_pdf(z) - z * numerics::normal_upper(z);
    case Family::gamma:
      if (z <= 0.0) return k - z;
      return k * boost::math::gamma_q(k + 1.0, z) - z * boost::math::gamma_q(k, z);
    case Family::lognormal: {
      if (z <= 0.0) return std_mean(d) - z;
      const double lz = std::log(z);
      return std_mean(d) * numerics::normal_cdf((k * k - lz) / k) -
             z * numerics::normal_upper(lz / k);
    }
    case Family::student_t:
      return (k + z * z) / (k - 1.0) * t_pdf(k, z) - z * std_sf(d, z);
    case Family::exponential: return z <= 0.0 ? 1.0 - z : std::exp(-z);
    case Family::uniform:
      if (z <= 0.0) return 0.5 - z;
      if (z >= 1.0) return 0.0;
      return 0.5 * (1.0 - z) * (1.0 - z);
    case Family::bernoulli:
      return k * std::max(1.0 - z, 0.0) + (1.0 - k) * std::max(-z, 0.0);
  }
  return 0.0;
}

// E(z - Z)_+
inline double std_lower_partial(const DistributionSpec& d, double z) {
  const double k = d.shape();
  switch (d.family()) {
    case Family::normal: return z * numerics::normal_cdf(z) + numerics::normal_pdf(z);
    case Family::gamma:
      if (z <= 0.0) return 0.0;
      return z * boost::math::gamma_p(k, z) - k * boost::math::gamma_p(k + 1.0, z);
    case Family::lognormal: {
      if (z <= 0.0) return 0.0;
      const double lz = std::log(z);
      return z * numerics::normal_cdf(lz / k) - std_mean(d) * numerics::normal_cdf((lz - k * k) / k);
    }
    case Family::student_t:
      return z * std_cdf(d, z) + (k + z * z) / (k - 1.0) * t_pdf(k, z);
    case Family::exponential: return z <= 0.0 ? 0.0 : z + std::expm1(-z);
    case Family::uniform:
      if (z <= 0.0) return 0.0;
      if (z >= 1.0) return z - 0.5;
      return 0.5 * z * z;
    case Family::bernoulli:
      return k * std::max(z - 1.0, 0.0) + (1.0 - k) * std::max(z, 0.0);
  }
  return 0.0;
}

inline std::pair<double, double> std_support(const DistributionSpec& d) {
  switch (d.family()) {
    case Family::normal:
    case Family::student_t: return {-numerics::inf, numerics::inf};
    case Family::gamma:
    case Family::lognormal:
    case Family::exponential: return {0.0, numerics::inf};
    case Family::uniform:
    case Family::bernoulli: return {0.0, 1.0};
  }
  return {-numerics::inf, numerics::inf};
}

inline double to_standard(const DistributionSpec& d, double x) {
  return (x - d.location()) / d.scale();
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Analytic primitives of X = location + scale * Z.

inline double cdf(const DistributionSpec& d, double x) {
  const double z = detail::to_standard(d, x);
  return d.scale() > 0.0 ? detail::std_cdf(d, z) : detail::std_sf(d, z);
}

// 1 - F(x), without cancellation in the upper tail.
inline double survival(const DistributionSpec& d, double x) {
  const double z = detail::to_standard(d, x);
  return d.scale() > 0.0 ? detail::std_sf(d, z) : detail::std_cdf(d, z);
}

inline double quantile(const DistributionSpec& d, double p) {
  detail::require_probability(p, "quantile level");
  const double z = d.scale() > 0.0 ? detail::std_quantile(d, p)
                                   : detail::std_upper_quantile(d, p);
  return d.location() + d.scale() * z;
}

inline double mean(const DistributionSpec& d) {
  return d.location() + d.scale() * detail::std_mean(d);
}

// Throws domain_error for student_t with dof <= 2.
inline double variance(const DistributionSpec& d) {
  return d.scale() * d.scale() * detail::std_variance(d);
}

// E[(X - mu)^3] / Var(X)^{3/2}; student_t requires dof > 3.
inline double third_standardized_moment(const DistributionSpec& d) {
  const double g = detail::std_skewness(d);
  return d.scale() > 0.0 ? g : -g;
}

// pi_X(t) = E(X - t)_+
inline double stop_loss(const DistributionSpec& d, double t) {
  const double s = d.scale();
  const double z = detail::to_standard(d, t);
  return s > 0.0 ? s * detail::std_upper_partial(d, z) : -s * detail::std_lower_partial(d, z);
}

// E(t - X)_+ = t - mu + pi_X(t)
inline double lower_partial(const DistributionSpec& d, double t) {
  const double s = d.scale();
  const double z = detail::to_standard(d, t);
  return s > 0.0 ? s * detail::std_lower_partial(d, z) : -s * detail::std_upper_partial(d, z);
}

// delta_X = E|X - mu| = 2 pi_X(mu).
inline double mad(const DistributionSpec& d) { return 2.0 * stop_loss(d, mean(d)); }

// Closed support interval [lo, hi] (bounds may be infinite).
inline std::pair<double, double> support(const DistributionSpec& d) {
  const auto [lo, hi] = detail::std_support(d);
  const double a = d.location() + d.scale() * lo;
  const double b = d.location() + d.scale() * hi;
  if (d.scale() > 0.0) return {a, b};
  return {b, a};
}

// ---------------------------------------------------------------------------
// Quadrature routes, independent of the closed-form partial moments.

// int_t^inf (1 - F(z)) dz
inline double stop_loss_by_quadrature(const DistributionSpec& d, double t) {
  const auto [lo, hi] = support(d);
  if (t >= hi) return 0.0;
  double head = 0.0;
  double start = t;
  if (t < lo) {
    head = lo - t;
    start = lo;
  }
  auto sf = [&d](double z) { return survival(d, z); };
  if (!d.is_continuous()) {
    // Piecewise constant survival: integrate exactly between atoms.
    const double a = d.location();
    const double b = d.location() + d.scale();
    double total = head;
    if (start < a) total += a - start;
    const double from = std::max(start, a);
    if (from < b) total += (b - from) * survival(d, 0.5 * (from + b));
    return total;
  }
  return head + numerics::integrate(sf, start, hi, 1e-13);
}

// int_a^b F(z) dz
inline double cdf_integral(const DistributionSpec& d, double a, double b) {
  auto F = [&d](double z) { return cdf(d, z); };
  return numerics::integrate(F, a, b, 1e-13);
}

inline double mad_by_quadrature(const DistributionSpec& d) {
  return 2.0 * stop_loss_by_quadrature(d, mean(d));
}

// ---------------------------------------------------------------------------
// Sampling by inversion of the counter-based uniform stream.

inline double draw(const DistributionSpec& d, double u) {
  const double z = d.scale() > 0.0 ? detail::std_quantile(d, u)
                                   : detail::std_upper_quantile(d, u);
  return d.location() + d.scale() * z;
}

inline Sample sample(const DistributionSpec& d, std::size_t n, std::uint64_t seed,
                     std::uint64_t stream = 0) {
  if (n == 0) throw domain_error("sample size must be at least 1");
  const counter_stream rng(seed, stream);
  std::vector<double> values(n);
  for (std::size_t i = 0; i < n; ++i) values[i] = draw(d, rng.uniform_at(i));
  return Sample(std::move(values));
}

}  // namespace expskew
