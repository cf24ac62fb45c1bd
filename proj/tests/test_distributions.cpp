#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "expskew/distributions.hpp"
#include "expskew/rng.hpp"
#include "expskew/sample.hpp"
#include "test_support.hpp"

using namespace expskew;

namespace {

std::vector<DistributionSpec> continuous_laws() {
  return {DistributionSpec::normal(1.0, 4.0),       DistributionSpec::gamma(0.1, 1.0),
          DistributionSpec::gamma(2.0, 3.0),        DistributionSpec::gamma(10.0, 1.0),
          DistributionSpec::lognormal(0.0, 2.25),   DistributionSpec::lognormal(0.5, 0.01),
          DistributionSpec::student_t(3.0),         DistributionSpec::student_t(5.0),
          DistributionSpec::exponential(2.0),       DistributionSpec::uniform(-1.0, 3.0),
          DistributionSpec::gamma(2.0, 1.0).reflected(),
          DistributionSpec::lognormal(0.0, 1.0).affine(-2.0, 5.0)};
}

}  // namespace

TEST(Distributions, ExponentialClosedForms) {
  const auto d = DistributionSpec::exponential(1.0);
  EXPECT_NEAR(cdf(d, 1.0), 1.0 - std::exp(-1.0), 1e-15);
  EXPECT_NEAR(quantile(d, 0.75), std::log(4.0), 1e-14);
  EXPECT_NEAR(mad(d), 2.0 / std::numbers::e, 1e-14);
  EXPECT_NEAR(stop_loss(d, 1.0), std::exp(-1.0), 1e-15);
  EXPECT_NEAR(stop_loss(d, -2.0), 3.0, 1e-14);
  EXPECT_NEAR(lower_partial(d, 2.0), 1.0 + std::exp(-2.0), 1e-14);
  EXPECT_DOUBLE_EQ(lower_partial(d, 0.0), 0.0);
}

TEST(Distributions, MomentSkewnessClosedForms) {
  EXPECT_NEAR(third_standardized_moment(DistributionSpec::gamma(4.0, 7.0)), 1.0, 1e-14);
  EXPECT_NEAR(third_standardized_moment(DistributionSpec::exponential(3.0)), 2.0, 1e-14);
  EXPECT_NEAR(third_standardized_moment(DistributionSpec::gamma(4.0, 1.0).reflected()), -1.0, 1e-14);
  const double w = std::exp(1.0);
  EXPECT_NEAR(third_standardized_moment(DistributionSpec::lognormal(3.0, 1.0)),
              (w + 2.0) * std::sqrt(w - 1.0), 1e-12);
  EXPECT_DOUBLE_EQ(third_standardized_moment(DistributionSpec::student_t(5.0)), 0.0);
  EXPECT_DOUBLE_EQ(third_standardized_moment(DistributionSpec::uniform(0.0, 1.0)), 0.0);
  const double p = 0.2;
  EXPECT_NEAR(third_standardized_moment(DistributionSpec::bernoulli(p)),
              (1.0 - 2.0 * p) / std::sqrt(p * (1.0 - p)), 1e-14);
}

TEST(Distributions, HeavyTailMomentsUndefined) {
  EXPECT_THROW(third_standardized_moment(DistributionSpec::student_t(3.0)), domain_error);
  EXPECT_THROW(variance(DistributionSpec::student_t(2.0)), domain_error);
  EXPECT_NO_THROW(mean(DistributionSpec::student_t(1.5)));
}

TEST(Distributions, InvalidParameters) {
  EXPECT_THROW(DistributionSpec::normal(0.0, 0.0), domain_error);
  EXPECT_THROW(DistributionSpec::gamma(-1.0, 1.0), domain_error);
  EXPECT_THROW(DistributionSpec::gamma(1.0, 0.0), domain_error);
  EXPECT_THROW(DistributionSpec::lognormal(0.0, -1.0), domain_error);
  EXPECT_THROW(DistributionSpec::student_t(1.0), domain_error);
  EXPECT_THROW(DistributionSpec::exponential(0.0), domain_error);
  EXPECT_THROW(DistributionSpec::uniform(1.0, 1.0), domain_error);
  EXPECT_THROW(DistributionSpec::bernoulli(0.0), domain_error);
  EXPECT_THROW(DistributionSpec::bernoulli(1.0), domain_error);
  EXPECT_THROW(DistributionSpec::gamma(1.0, 1.0).affine(0.0, 1.0), domain_error);
  EXPECT_THROW(quantile(DistributionSpec::normal(0.0, 1.0), 1.0), domain_error);
}

TEST(Distributions, QuantileInvertsCdf) {
  for (const auto& d : continuous_laws()) {
    for (double p : {1e-9, 1e-4, 0.01, 0.3, 0.5, 0.77, 0.99, 1.0 - 1e-6}) {
      const double x = quantile(d, p);
      EXPECT_NEAR(cdf(d, x), p, 1e-12 * std::max(1.0, 1.0 / (1.0 - p)) + 1e-13) << d.describe() << " p=" << p;
    }
  }
}

TEST(Distributions, CdfAndSurvivalAreComplements) {
  for (const auto& d : continuous_laws()) {
    for (double p : {0.001, 0.2, 0.5, 0.9, 0.999}) {
      const double x = quantile(d, p);
      EXPECT_NEAR(cdf(d, x) + survival(d, x), 1.0, 1e-14) << d.describe();
    }
  }
}

TEST(Distributions, StopLossMatchesQuadrature) {
  auto laws = continuous_laws();
  laws.push_back(DistributionSpec::bernoulli(0.3));
  laws.push_back(DistributionSpec::bernoulli(0.3).affine(-2.0, 1.0));
  for (const auto& d : laws) {
    const double sd = d.family() == Family::student_t && d.shape() <= 2.0 ? 1.0 : std::sqrt(variance(d));
    for (double z : {-3.0, -1.0, -0.2, 0.0, 0.4, 1.0, 2.5}) {
      const double t = mean(d) + z * sd;
      EXPECT_NEAR(stop_loss(d, t), stop_loss_by_quadrature(d, t), 1e-10 * (1.0 + sd))
          << d.describe() << " t=" << t;
    }
  }
}

TEST(Distributions, PartialMomentIdentity) {
  // pi(t) - E(t - X)_+ = mu - t
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const auto d = testing_support::random_law(rng);
    const double t = quantile(d, std::uniform_real_distribution<double>(0.01, 0.99)(rng));
    EXPECT_NEAR(stop_loss(d, t) - lower_partial(d, t), mean(d) - t, 1e-11 * (1.0 + std::abs(t)))
        << d.describe();
  }
}

TEST(Distributions, MadMatchesQuadrature) {
  for (const auto& d : continuous_laws()) {
    EXPECT_NEAR(mad(d), mad_by_quadrature(d), 1e-10 * mad(d)) << d.describe();
  }
  EXPECT_NEAR(mad(DistributionSpec::normal(0.0, 1.0)), std::sqrt(2.0 / std::numbers::pi), 1e-15);
  EXPECT_NEAR(mad(DistributionSpec::bernoulli(0.3)), 2.0 * 0.3 * 0.7, 1e-15);
}

TEST(Distributions, AffineImages) {
  const auto g = DistributionSpec::gamma(2.0, 1.0);
  const auto h = g.affine(-3.0, 2.0);
  for (double x : {-4.0, -1.0, 0.5, 1.9}) {
    EXPECT_NEAR(cdf(h, x), survival(g, (x - 2.0) / -3.0), 1e-15);
  }
  EXPECT_NEAR(mean(h), -4.0, 1e-14);
  EXPECT_NEAR(variance(h), 18.0, 1e-12);

  const auto b = DistributionSpec::bernoulli(0.2).reflected();
  EXPECT_EQ(b.family(), Family::bernoulli);
  EXPECT_NEAR(b.shape(), 0.8, 1e-15);
  EXPECT_NEAR(mean(b), -0.2, 1e-15);
}

TEST(Distributions, DescribeRoundTripsPlainSpecs) {
  EXPECT_EQ(DistributionSpec::gamma(0.1, 1.0).describe(), "gamma:shape=0.1,scale=1");
  EXPECT_EQ(DistributionSpec::student_t(5.0).describe(), "student_t:df=5");
  EXPECT_EQ(DistributionSpec::bernoulli(0.3).describe(), "bernoulli:p=0.3");
}

TEST(Rng, CounterStreamIsDeterministicAndIndexed) {
  const counter_stream a(42, 3);
  counter_stream b(42, 3);
  for (std::uint64_t i = 0; i < 100; ++i) {
    EXPECT_EQ(a.bits_at(i), b());
  }
  EXPECT_NE(counter_stream(42, 3).bits_at(0), counter_stream(42, 4).bits_at(0));
  EXPECT_NE(counter_stream(42, 3).bits_at(0), counter_stream(43, 3).bits_at(0));
}

TEST(Rng, UniformsLieStrictlyInsideUnitInterval) {
  const counter_stream s(7, 0);
  double sum = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double u = s.uniform_at(static_cast<std::uint64_t>(i));
    ASSERT_GT(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
  }
  EXPECT_NEAR(sum / n, 0.5, 4.0 * std::sqrt(1.0 / 12.0 / n));
}

TEST(Rng, WorksWithStandardDistributions) {
  counter_stream s(1, 0);
  std::uniform_int_distribution<int> die(1, 6);
  std::set<int> seen;
  for (int i = 0; i < 200; ++i) seen.insert(die(s));
  EXPECT_EQ(seen.size(), 6u);
}

TEST(Sampling, SameSeedSameSample) {
  const auto d = DistributionSpec::lognormal(0.0, 1.0);
  const auto a = sample(d, 500, 9, 2);
  const auto b = sample(d, 500, 9, 2);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a.values()[i], b.values()[i]);
}

TEST(Sampling, PrefixesAreNested) {
  const auto d = DistributionSpec::gamma(2.0, 1.0);
  const auto small = sample(d, 20, 5, 1);
  const auto large = sample(d, 1000, 5, 1);
  for (std::size_t i = 0; i < small.size(); ++i) EXPECT_EQ(small.values()[i], large.values()[i]);
}

TEST(Sampling, KolmogorovDistanceIsSmall) {
  // Critical value of the one-sample KS statistic at level 0.001 is about 1.95 / sqrt(n).
  const std::size_t n = 20000;
  for (const auto& d : continuous_laws()) {
    const auto s = sample(d, n, 2024, 0);
    const auto x = s.sorted();
    double dmax = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double F = cdf(d, x[i]);
      dmax = std::max({dmax, std::abs(F - static_cast<double>(i) / n),
                       std::abs(F - static_cast<double>(i + 1) / n)});
    }
    EXPECT_LT(dmax, 1.95 / std::sqrt(static_cast<double>(n))) << d.describe();
  }
}

TEST(Sampling, BernoulliFrequency) {
  const auto s = sample(DistributionSpec::bernoulli(0.3), 100000, 3, 0);
  EXPECT_NEAR(s.mean(), 0.3, 4.0 * std::sqrt(0.21 / 100000.0));
  for (double v : s.values()) EXPECT_TRUE(v == 0.0 || v == 1.0);
}

TEST(SampleClass, Conventions) {
  const Sample s{3.0, 1.0, 2.0, 2.0, 10.0};
  EXPECT_DOUBLE_EQ(s.mean(), 3.6);
  EXPECT_DOUBLE_EQ(s.ecdf(2.0), 0.6);
  EXPECT_DOUBLE_EQ(s.ecdf(1.999), 0.2);
  EXPECT_DOUBLE_EQ(s.quantile(0.4), 2.0);
  EXPECT_DOUBLE_EQ(s.quantile(0.41), 2.0);
  EXPECT_DOUBLE_EQ(s.quantile(0.61), 3.0);
  EXPECT_DOUBLE_EQ(s.quantile(0.5), 2.0);
  EXPECT_NEAR(s.stop_loss(2.5), (0.5 + 7.5) / 5.0, 1e-15);
  EXPECT_NEAR(s.lower_partial(2.5), (1.5 + 0.5 + 0.5) / 5.0, 1e-15);
  EXPECT_NEAR(s.mad(), (2.6 + 1.6 + 1.6 + 0.6 + 6.4) / 5.0, 1e-14);
}

TEST(SampleClass, RejectsBadInput) {
  EXPECT_THROW(Sample(std::vector<double>{}), domain_error);
  EXPECT_THROW(Sample({1.0, std::nan("")}), domain_error);
}

TEST(SampleReader, ParsesCommentsAndBlankLines) {
  std::istringstream in("# header\n1.5\n\n  -2e-1 \n+3\n");
  const auto s = read_sample(in);
  ASSERT_EQ(s.size(), 3u);
  EXPECT_DOUBLE_EQ(s.values()[1], -0.2);
}

TEST(SampleReader, NamesTheOffendingLine) {
  std::istringstream in("1\n2\nthree\n4\n");
  try {
    read_sample(in);
    FAIL() << "expected parse_error";
  } catch (const parse_error& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
}
