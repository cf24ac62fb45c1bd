#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <istream>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <system_error>
#include <utility>
#include <vector>

#include "expskew/errors.hpp"

namespace expskew {

// Finite ordered multiset of reals. Immutable after construction.
//
// Caches the sorted values, the mean, and prefix / suffix sums of the
// *centred* sorted values (x_(i) - mean). Centring keeps partial sums small, so
// expectile and stop-loss queries stay accurate after large shifts.
class Sample {
 public:
  explicit Sample(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty()) throw domain_error("Sample requires at least one value");
    for (double v : values_) {
      if (!std::isfinite(v)) throw domain_error("Sample values must be finite");
    }
    sorted_ = values_;
    std::sort(sorted_.begin(), sorted_.end());

    // Two-pass mean over mirrored pairs x_(i) + x_(n+1-i). The summation
    // order is invariant under x -> -x, so mean(-x) == -mean(x) bit for bit.
    const std::size_t n = sorted_.size();
    const double nd = static_cast<double>(n);
    auto paired_sum = [&](double shift) {
      double sum = 0.0;
      for (std::size_t i = 0; i < n / 2; ++i) {
        sum += (sorted_[i] - shift) + (sorted_[n - 1 - i] - shift);
      }
      if (n % 2 == 1) sum += sorted_[n / 2] - shift;
      return sum;
    };
    const double rough = paired_sum(0.0) / nd;
    mean_ = rough + paired_sum(rough) / nd;

    prefix_.resize(n + 1, 0.0);
    suffix_.resize(n + 1, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      prefix_[i + 1] = prefix_[i] + (sorted_[i] - mean_);
      suffix_[i + 1] = suffix_[i] + (sorted_[n - 1 - i] - mean_);
    }
  }

  Sample(std::initializer_list<double> values) : Sample(std::vector<double>(values)) {}

  std::size_t size() const noexcept { return values_.size(); }
  std::span<const double> values() const noexcept { return values_; }
  std::span<const double> sorted() const noexcept { return sorted_; }
  double mean() const noexcept { return mean_; }
  double min() const noexcept { return sorted_.front(); }
  double max() const noexcept { return sorted_.back(); }
  bool is_degenerate() const noexcept { return sorted_.front() == sorted_.back(); }

  // Sum of (x_(i) - mean) over the k smallest values.
  double centred_prefix(std::size_t k) const noexcept { return prefix_[k]; }

  // Sum of (x_(i) - mean) over the k largest values, accumulated from the top.
  double centred_suffix(std::size_t k) const noexcept { return suffix_[k]; }

  // Number of observations <= x.
  std::size_t count_at_most(double x) const noexcept {
    return static_cast<std::size_t>(std::upper_bound(sorted_.begin(), sorted_.end(), x) -
                                    sorted_.begin());
  }

  // Number of observations < x.
  std::size_t count_below(double x) const noexcept {
    return static_cast<std::size_t>(std::lower_bound(sorted_.begin(), sorted_.end(), x) -
                                    sorted_.begin());
  }

  // Right-continuous empirical cdf: (1/n) #{X_i <= x}.
  double ecdf(double x) const noexcept {
    return static_cast<double>(count_at_most(x)) / static_cast<double>(size());
  }

  // Empirical stop-loss transform (1/n) sum (X_i - t)_+ in O(log n).
  double stop_loss(double t) const noexcept {
    const std::size_t k = count_at_most(t);
    const double above = prefix_.back() - prefix_[k];
    const double m = static_cast<double>(size() - k);
    return (above - m * (t - mean_)) / static_cast<double>(size());
  }

  // Empirical lower partial moment (1/n) sum (t - X_i)_+ in O(log n).
  double lower_partial(double t) const noexcept {
    const std::size_t k = count_at_most(t);
    const double m = static_cast<double>(k);
    return (m * (t - mean_) - prefix_[k]) / static_cast<double>(size());
  }

  // Generalized inverse x_(ceil(n p)) of the sorted sample.
  double quantile(double p) const {
    detail::require_probability(p, "quantile level");
    const double n = static_cast<double>(size());
    // The fuzz keeps exact products such as 9 * (1/3) from rounding up.
    auto k = static_cast<std::size_t>(std::ceil(n * p - 1e-12 * n));
    k = std::clamp<std::size_t>(k, 1, size());
    return sorted_[k - 1];
  }

  // (1/n) sum |X_i - mean|.
  double mad() const noexcept { return 2.0 * stop_loss(mean_); }

  // c * X + d applied elementwise (original order preserved).
  Sample transformed(double c, double d) const {
    std::vector<double> out(values_.size());
    std::transform(values_.begin(), values_.end(), out.begin(),
                   [c, d](double v) { return c * v + d; });
    return Sample(std::move(out));
  }

 private:
  std::vector<double> values_;
  std::vector<double> sorted_;
  std::vector<double> prefix_;
  std::vector<double> suffix_;
  double mean_ = 0.0;
};

// Reads one real per line. Blank lines and lines whose first non-blank
// character is '#' are skipped; anything else that is not a single finite
// number is a parse_error naming the line.
inline Sample read_sample(std::istream& in) {
  std::vector<double> values;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view(line);
    const auto first = view.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) continue;
    view.remove_prefix(first);
    if (view.front() == '#') continue;
    view = view.substr(0, view.find_last_not_of(" \t\r") + 1);
    if (view.front() == '+') view.remove_prefix(1);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(view.data(), view.data() + view.size(), value);
    if (ec != std::errc() || ptr != view.data() + view.size() || !std::isfinite(value)) {
      throw parse_error(line_no, "not a finite real number: '" + line + "'");
    }
    values.push_back(value);
  }
  if (values.empty()) throw parse_error(line_no, "no observations found");
  return Sample(std::move(values));
}

inline Sample read_sample_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open sample file '" + path + "'");
  return read_sample(in);
}

}  // namespace expskew
