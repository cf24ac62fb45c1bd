#pragma once

// Grid diagnostics for skewness and location orders between two
// populations. A `holds` verdict certifies the evaluation grid only; it is
// numerical evidence, not a proof.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <string>
#include <vector>

#include "expskew/distributions.hpp"
#include "expskew/errors.hpp"
#include "expskew/expectile.hpp"
#include "expskew/numerics.hpp"

namespace expskew {

enum class Relation { holds, fails, inconclusive };

inline const char* relation_name(Relation r) noexcept {
  switch (r) {
    case Relation::holds: return "holds";
    case Relation::fails: return "fails";
    case Relation::inconclusive: return "inconclusive";
  }
  return "unknown";
}

// witness is empty iff relation == holds.
struct OrderVerdict {
  Relation relation = Relation::holds;
  std::vector<double> witness;
  std::vector<double> grid;
};

struct OrderOptions {
  std::size_t grid_size = 2001;
  double margin = 1e-6;     // endpoints of the (0,1) grid are excluded by this
  double dead_band = 1e-9;  // |G~ - F~| below this counts as zero
  double rel_tol = 1e-9;
};

namespace detail {

inline void require_continuous(const DistributionSpec& d, const char* what) {
  if (!d.is_continuous()) {
    throw unsupported_error(std::string(what) + " requires continuous families; got " +
                            d.describe());
  }
}

inline std::vector<double> probability_grid(const OrderOptions& opt) {
  if (opt.grid_size < 10) throw domain_error("order diagnostics need grid_size >= 10");
  return numerics::linspace(opt.margin, 1.0 - opt.margin, opt.grid_size);
}

inline OrderVerdict finish(std::vector<double> witness, std::vector<double> grid, bool clean) {
  OrderVerdict v;
  v.grid = std::move(grid);
  if (witness.empty() && clean) {
    v.relation = Relation::holds;
  } else {
    v.relation = clean ? Relation::fails : Relation::inconclusive;
    v.witness = std::move(witness);
  }
  return v;
}

}  // namespace detail

// Convex transform order F <=_2 G: G^{-1}(F(x)) convex.
//
// With a = F^{-1}, b = G^{-1}, the three-point inequality
//   [(a(w)-a(v)) - (a(v)-a(u))] / (a(w)-a(u))
//     <= [(b(w)-b(v)) - (b(v)-b(u))] / (b(w)-b(u))
// for every ordered grid triple u < v < w is equivalent to convexity of the
// interpolating graph, i.e. to nondecreasing consecutive slopes. That is what
// is checked, in O(N). Witnesses are the middle u of violating triples.
inline OrderVerdict convex_transform_order(const DistributionSpec& F, const DistributionSpec& G,
                                           const OrderOptions& opt = {}) {
  detail::require_continuous(F, "convex_transform_order");
  detail::require_continuous(G, "convex_transform_order");
  auto u = detail::probability_grid(opt);
  const std::size_t n = u.size();
  std::vector<double> x(n);
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = quantile(F, u[i]);
    y[i] = quantile(G, u[i]);
  }
  std::vector<double> witness;
  bool clean = true;
  double prev_slope = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double dx = x[i + 1] - x[i];
    const double dy = y[i + 1] - y[i];
    if (!(dx > 0.0) || !(dy > 0.0)) {
      // Quantiles collapsed in floating point; nothing can be said here.
      clean = false;
      witness.push_back(u[i]);
      continue;
    }
    const double slope = dy / dx;
    if (i > 0 && slope < prev_slope - opt.rel_tol * (std::abs(slope) + std::abs(prev_slope))) {
      witness.push_back(u[i]);
    }
    prev_slope = slope;
  }
  return detail::finish(std::move(witness), std::move(u), clean);
}

namespace detail {

// Sign changes of a sequence, ignoring entries inside the dead band. A run
// of zeros between opposite signs is one crossing; between equal signs it is
// a touch. Returns the crossing locations.
inline std::vector<double> crossings(const std::vector<double>& x, const std::vector<double>& v,
                                     double band) {
  std::vector<double> out;
  int last_sign = 0;
  double last_x = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const int s = v[i] > band ? 1 : (v[i] < -band ? -1 : 0);
    if (s == 0) continue;
    if (last_sign != 0 && s != last_sign) out.push_back(0.5 * (last_x + x[i]));
    last_sign = s;
    last_x = x[i];
  }
  return out;
}

}  // namespace detail

// Mean/MAD skewness order F <=_mu^delta G: the standardized cdfs
// F~(x) = F(delta_F x + mu_F) and G~(x) = G(delta_G x + mu_G) cross exactly
// once on each side of 0 with F~(0) <= G~(0), or coincide.
//
// Evaluated on the union of both standardized quantile grids plus 0. A
// difference inside the dead band at x = 0 (with the cdfs not identical) is
// reported as inconclusive. Witnesses: crossing locations in standardized
// units, or 0 when the ordering at the mean is the violated condition.
inline OrderVerdict mean_mad_order(const DistributionSpec& F, const DistributionSpec& G,
                                   const OrderOptions& opt = {}) {
  detail::require_continuous(F, "mean_mad_order");
  detail::require_continuous(G, "mean_mad_order");
  const double muF = mean(F);
  const double muG = mean(G);
  const double dF = mad(F);
  const double dG = mad(G);
  auto Ft = [&](double x) { return cdf(F, dF * x + muF); };
  auto Gt = [&](double x) { return cdf(G, dG * x + muG); };

  const auto u = detail::probability_grid(opt);
  std::vector<double> xs;
  xs.reserve(2 * u.size() + 1);
  for (double p : u) {
    xs.push_back((quantile(F, p) - muF) / dF);
    xs.push_back((quantile(G, p) - muG) / dG);
  }
  xs.push_back(0.0);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  std::vector<double> diff(xs.size());
  bool identical = true;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    diff[i] = Gt(xs[i]) - Ft(xs[i]);
    if (std::abs(diff[i]) > opt.dead_band) identical = false;
  }
  if (identical) return detail::finish({}, xs, true);

  const double at_zero = Gt(0.0) - Ft(0.0);
  if (std::abs(at_zero) <= opt.dead_band) return detail::finish({0.0}, xs, false);

  const auto zero = static_cast<std::size_t>(std::find(xs.begin(), xs.end(), 0.0) - xs.begin());
  const std::vector<double> left_x(xs.begin(), xs.begin() + zero + 1);
  const std::vector<double> left_v(diff.begin(), diff.begin() + zero + 1);
  const std::vector<double> right_x(xs.begin() + zero, xs.end());
  const std::vector<double> right_v(diff.begin() + zero, diff.end());
  const auto left = detail::crossings(left_x, left_v, opt.dead_band);
  const auto right = detail::crossings(right_x, right_v, opt.dead_band);

  const bool ok = left.size() == 1 && right.size() == 1 && at_zero > 0.0;
  if (ok) return detail::finish({}, xs, true);

  std::vector<double> witness;
  if (at_zero < 0.0) witness.push_back(0.0);
  witness.insert(witness.end(), left.begin(), left.end());
  witness.insert(witness.end(), right.begin(), right.end());
  if (witness.empty()) witness.push_back(0.0);
  return detail::finish(std::move(witness), xs, true);
}

// Expectile (location) order F <=_e G: e_F(alpha) <= e_G(alpha) on the
// alpha grid. Witnesses are the violating alphas.
inline OrderVerdict expectile_order(const DistributionSpec& F, const DistributionSpec& G,
                                    const OrderOptions& opt = {}) {
  auto a = detail::probability_grid(opt);
  std::vector<double> witness;
  for (double alpha : a) {
    const double eF = expectile(F, alpha);
    const double eG = expectile(G, alpha);
    if (eF > eG + opt.rel_tol * (1.0 + std::abs(eF) + std::abs(eG))) witness.push_back(alpha);
  }
  return detail::finish(std::move(witness), std::move(a), true);
}

// "holds" or "fails at 0.1, 0.2, 0.3 (+n more)".
inline std::string render(const OrderVerdict& v, std::size_t max_witnesses = 3) {
  std::string out = relation_name(v.relation);
  if (v.witness.empty()) return out;
  out += " at ";
  char buf[32];
  for (std::size_t i = 0; i < v.witness.size() && i < max_witnesses; ++i) {
    std::snprintf(buf, sizeof buf, "%.6g", v.witness[i]);
    if (i > 0) out += ", ";
    out += buf;
  }
  if (v.witness.size() > max_witnesses) {
    out += " (+" + std::to_string(v.witness.size() - max_witnesses) + " more)";
  }
  return out;
}

}  // namespace expskew
