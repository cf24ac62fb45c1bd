#pragma once

// Monte Carlo comparison of skewness estimators: standardized bias,
// variance and MSE of gamma_M, b2(alpha), s2(alpha) and s3 plug-in
// estimators, plus theoretical b2 / s2 curves over a family parameter.
//
// Replication r of a study draws its observations from counter stream
// (master_seed, r); the sample of size n is the first n draws of that
// stream. Results therefore do not depend on the order (or the thread) in
// which replications are executed.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "expskew/distributions.hpp"
#include "expskew/errors.hpp"
#include "expskew/sample.hpp"
#include "expskew/skewness.hpp"

namespace expskew {

enum class Measure { gamma_m, b2, s2, s3 };

inline const char* measure_name(Measure m) noexcept {
  switch (m) {
    case Measure::gamma_m: return "gamma_m";
    case Measure::b2: return "b2";
    case Measure::s2: return "s2";
    case Measure::s3: return "s3";
  }
  return "unknown";
}

inline bool measure_uses_alpha(Measure m) noexcept { return m == Measure::b2 || m == Measure::s2; }

struct MeasureSpec {
  Measure id = Measure::s2;
  double alpha = 0.25;  // ignored for gamma_m and s3
};

struct ExperimentConfig {
  DistributionSpec distribution = DistributionSpec::normal(0.0, 1.0);
  std::vector<MeasureSpec> measures;
  std::vector<std::size_t> sample_sizes{20, 100, 1000};
  std::size_t replications = 2000;
  std::uint64_t master_seed = 1;
  unsigned threads = 0;  // 0: hardware concurrency
};

// The full published grid: 10000 replications, n from 20 to 10000.
inline ExperimentConfig with_full_grid(ExperimentConfig c) {
  c.sample_sizes = {20, 50, 100, 200, 500, 1000, 2000, 5000, 10000};
  c.replications = 10000;
  return c;
}

struct ExperimentRow {
  MeasureSpec measure;
  std::size_t n = 0;
  double true_value = 0.0;
  bool standardized = true;  // false when the true value is zero
  double sbias = 0.0;
  double svar = 0.0;
  double smse = 0.0;
  double var_share = 0.0;
  std::size_t failures = 0;
  std::size_t successes = 0;
};

struct SkippedMeasure {
  MeasureSpec measure;
  std::string reason;
};

struct ExperimentTable {
  std::string distribution;
  std::size_t replications = 0;
  std::uint64_t master_seed = 0;
  std::vector<ExperimentRow> rows;
  std::vector<SkippedMeasure> skipped;
  // False when more than 1% of the replications of any row failed.
  bool valid = true;
};

// |true value| at or below this is treated as a symmetric (zero) target.
inline constexpr double zero_target_tolerance = 1e-10;

// Population value of a measure; throws domain_error when it does not exist.
inline double true_value(const DistributionSpec& d, Measure m, double alpha = 0.25) {
  double v = 0.0;
  switch (m) {
    case Measure::gamma_m: v = moment_skewness(d); break;
    case Measure::b2: v = quantile_skewness(d, alpha); break;
    case Measure::s2: v = expectile_skewness(d, alpha); break;
    case Measure::s3: v = tajuddin_s3(d); break;
  }
  return std::abs(v) <= zero_target_tolerance ? 0.0 : v;
}

inline double estimate(const Sample& s, const MeasureSpec& m) {
  switch (m.id) {
    case Measure::gamma_m: return moment_skewness(s);
    case Measure::b2: return quantile_skewness(s, m.alpha);
    case Measure::s2: return expectile_skewness(s, m.alpha);
    case Measure::s3: return tajuddin_s3(s);
  }
  return 0.0;
}

inline void validate(const ExperimentConfig& c) {
  if (c.replications < 1) throw domain_error("replications must be at least 1");
  if (c.sample_sizes.empty()) throw domain_error("at least one sample size is required");
  for (std::size_t n : c.sample_sizes) {
    if (n < 2) throw domain_error("sample sizes must be at least 2");
  }
  if (c.measures.empty()) throw domain_error("at least one measure is required");
  for (const auto& m : c.measures) {
    if (measure_uses_alpha(m.id)) detail::require_lower_alpha(m.alpha);
  }
}

namespace detail {

// Runs body(i) for i in [0, count) on up to `threads` workers with a static
// interleaved schedule.
template <class Body>
void parallel_for(std::size_t count, unsigned threads, Body&& body) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += threads) body(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace detail

// The sample of replication r at size n (first n draws of stream r).
inline Sample replication_sample(const ExperimentConfig& c, std::size_t r, std::size_t n) {
  return sample(c.distribution, n, c.master_seed, r);
}

inline ExperimentTable run(const ExperimentConfig& config) {
  validate(config);

  ExperimentTable table;
  table.distribution = config.distribution.describe();
  table.replications = config.replications;
  table.master_seed = config.master_seed;

  struct Target {
    MeasureSpec spec;
    double value;
  };
  std::vector<Target> targets;
  for (const auto& m : config.measures) {
    try {
      targets.push_back({m, true_value(config.distribution, m.id, m.alpha)});
    } catch (const domain_error& e) {
      table.skipped.push_back({m, e.what()});
    }
  }

  const std::size_t reps = config.replications;
  const std::size_t n_sizes = config.sample_sizes.size();
  const std::size_t n_max = *std::max_element(config.sample_sizes.begin(), config.sample_sizes.end());
  constexpr double failed = std::numeric_limits<double>::quiet_NaN();

  // estimates[(size_index * targets + target_index) * reps + r]
  std::vector<double> estimates(n_sizes * targets.size() * reps, failed);
  detail::parallel_for(reps, config.threads, [&](std::size_t r) {
    const Sample full = replication_sample(config, r, n_max);
    const auto draws = full.values();
    for (std::size_t si = 0; si < n_sizes; ++si) {
      const std::size_t n = config.sample_sizes[si];
      const Sample s(std::vector<double>(draws.begin(), draws.begin() + static_cast<std::ptrdiff_t>(n)));
      for (std::size_t ti = 0; ti < targets.size(); ++ti) {
        double v = failed;
        try {
          v = estimate(s, targets[ti].spec);
        } catch (const degenerate_input_error&) {
        } catch (const numerical_error&) {
        }
        estimates[(si * targets.size() + ti) * reps + r] = std::isfinite(v) ? v : failed;
      }
    }
  });

  for (std::size_t ti = 0; ti < targets.size(); ++ti) {
    for (std::size_t si = 0; si < n_sizes; ++si) {
      const double gamma = targets[ti].value;
      const bool standardized = gamma != 0.0;
      const double scale = standardized ? gamma : 1.0;
      const double* est = &estimates[(si * targets.size() + ti) * reps];

      ExperimentRow row;
      row.measure = targets[ti].spec;
      row.n = config.sample_sizes[si];
      row.true_value = gamma;
      row.standardized = standardized;

      double sum = 0.0;
      double sum_sq_err = 0.0;
      for (std::size_t r = 0; r < reps; ++r) {
        if (std::isnan(est[r])) {
          ++row.failures;
          continue;
        }
        const double err = (est[r] - gamma) / scale;
        sum += err;
        sum_sq_err += err * err;
        ++row.successes;
      }
      if (row.successes > 0) {
        const double k = static_cast<double>(row.successes);
        const double mean_err = sum / k;
        double var = 0.0;
        for (std::size_t r = 0; r < reps; ++r) {
          if (std::isnan(est[r])) continue;
          const double dev = (est[r] - gamma) / scale - mean_err;
          var += dev * dev;
        }
        row.sbias = mean_err;
        row.svar = var / k;
        row.smse = sum_sq_err / k;
        row.var_share = row.smse > 0.0 ? std::min(row.svar / row.smse, 1.0) : 0.0;
      } else {
        row.sbias = row.svar = row.smse = row.var_share = std::numeric_limits<double>::quiet_NaN();
      }
      if (static_cast<double>(row.failures) > 0.01 * static_cast<double>(reps)) table.valid = false;
      table.rows.push_back(row);
    }
  }
  return table;
}

// ---------------------------------------------------------------------------
// Theoretical curves

struct TheoryPoint {
  double param = 0.0;
  double alpha = 0.0;
  double b2 = 0.0;
  double s2_raw = 0.0;
  double s2 = 0.0;
};

// Member of a one-parameter family used for theory curves:
//   gamma       shape k (scale 1)
//   lognormal   log-variance (log-mean 0)
//   student_t   degrees of freedom
//   bernoulli   success probability
inline DistributionSpec family_member(Family f, double param) {
  switch (f) {
    case Family::gamma: return DistributionSpec::gamma(param, 1.0);
    case Family::lognormal: return DistributionSpec::lognormal(0.0, param);
    case Family::student_t: return DistributionSpec::student_t(param);
    case Family::bernoulli: return DistributionSpec::bernoulli(param);
    default: break;
  }
  throw domain_error(std::string("family '") + family_name(f) +
                     "' has no shape parameter for theory curves");
}

inline std::vector<TheoryPoint> theory_curves(Family f, const std::vector<double>& params,
                                              const std::vector<double>& alphas) {
  if (params.empty() || alphas.empty()) throw domain_error("theory curves need nonempty grids");
  std::vector<TheoryPoint> out;
  out.reserve(params.size() * alphas.size());
  for (double p : params) {
    const auto d = family_member(f, p);
    for (double a : alphas) {
      detail::require_lower_alpha(a);
      out.push_back({p, a, quantile_skewness(d, a), expectile_skewness(d, a, Scaling::raw),
                     expectile_skewness(d, a, Scaling::normalized)});
    }
  }
  return out;
}

}  // namespace expskew
