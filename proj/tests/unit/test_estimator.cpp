#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "hardy/classification.hpp"
#include "hardy/errors.hpp"
#include "hardy/estimator.hpp"
#include "hardy/prefix.hpp"

namespace hardy {
namespace {

// mpmath, 50 digits, for the log-linear mean on N^2/n^2.
constexpr double kCounterexampleSum10 = 370.88543590679952169;
constexpr double kCounterexampleSum100 = 73407.625633489063394;

double curve_at(const FamilySearchResult& r, double param) {
  for (const auto& [p, v] : r.ratio_curve) {
    if (p == param) return v;
  }
  ADD_FAILURE() << "param " << param << " not on curve";
  return 0.0;
}

void expect_best_is_curve_max(const FamilySearchResult& r) {
  const auto top = std::max_element(r.ratio_curve.begin(), r.ratio_curve.end(),
                                    [](const auto& a, const auto& b) { return a.second < b.second; });
  EXPECT_EQ(r.best_ratio, top->second);
  ASSERT_EQ(r.best_params.size(), 1u);
  EXPECT_EQ(r.best_params[0], top->first);
  EXPECT_TRUE(std::is_sorted(r.ratio_curve.begin(), r.ratio_curve.end()));
}

TEST(Estimator, PowerOneGrowsPerDecade) {
  const std::vector<double> grid{100, 1000, 10000};
  const auto r = estimate_hardy_lower_bound(PowerMean{1.0}, SequenceFamily::truncharmonic_N, grid, 1000);
  expect_best_is_curve_max(r);
  const double r2 = curve_at(r, 100);
  const double r3 = curve_at(r, 1000);
  const double r4 = curve_at(r, 10000);
  EXPECT_GE(r3, 1.1 * r2);
  EXPECT_GE(r4, 1.1 * r3);
  EXPECT_EQ(r.family, "truncharmonic_N");
  EXPECT_EQ(r.mean, "power:1");
  EXPECT_EQ(r.n_max_used, 40000u);
}

TEST(Estimator, PowerHalfApproachesFourFromBelow) {
  const std::vector<double> grid{1e3, 1e4, 1e5, 1e6};
  const auto r = estimate_hardy_lower_bound(PowerMean{0.5}, SequenceFamily::truncharmonic_N, grid, 1000);
  expect_best_is_curve_max(r);
  double prev = 0.0;
  for (const double n : grid) {
    const double v = curve_at(r, n);
    EXPECT_GT(v, prev);
    prev = v;
  }
  EXPECT_GE(r.best_ratio, 0.7 * 4.0);
  EXPECT_LE(r.best_ratio, 4.0);
  for (const auto& [p, v] : r.ratio_curve) EXPECT_LE(v, 4.0 + 1e-9);
}

TEST(Estimator, GeometricFamilyStaysBelowConstant) {
  std::vector<double> grid;
  for (int i = 1; i <= 99; ++i) grid.push_back(i / 100.0);
  const auto r = estimate_hardy_lower_bound(PowerMean{0.5}, SequenceFamily::geometric_r, grid, 1000);
  expect_best_is_curve_max(r);
  EXPECT_LE(r.best_ratio, 4.0);
  EXPECT_GT(r.ratio_curve.size(), grid.size());
  EXPECT_EQ(r.n_max_used, 1000u);
}

TEST(Estimator, EveryRatioIsSoundForKnownConstants) {
  const std::vector<double> th{1e3, 1e4};
  const std::vector<double> beta{1.05, 1.2, 1.5, 2.0, 3.0};
  const std::vector<double> geo{0.1, 0.5, 0.9, 0.99};
  for (const double alpha : {-1.0, 0.0, 0.5}) {
    const double h = *classify_power(alpha).hardy_constant;
    for (const auto& r : {estimate_hardy_lower_bound(PowerMean{alpha}, SequenceFamily::truncharmonic_N, th, 1000),
                          estimate_hardy_lower_bound(PowerMean{alpha}, SequenceFamily::powerlaw_beta, beta, 5000),
                          estimate_hardy_lower_bound(PowerMean{alpha}, SequenceFamily::geometric_r, geo, 2000)}) {
      for (const auto& [p, v] : r.ratio_curve) EXPECT_LE(v, h + 1e-9) << alpha << " " << r.family << " " << p;
    }
  }
}

TEST(Estimator, TruncatedHarmonicBestIsMonotoneInN) {
  for (const double alpha : {-1.0, 0.0, 0.5}) {
    double prev = 0.0;
    for (const double n : {1e3, 1e4, 1e5}) {
      const std::vector<double> grid{n};
      const auto r = estimate_hardy_lower_bound(PowerMean{alpha}, SequenceFamily::truncharmonic_N, grid, 1000);
      EXPECT_GE(r.best_ratio, prev - 1e-9) << alpha << " N=" << n;
      prev = r.best_ratio;
    }
  }
}

TEST(Estimator, SinglePointGridSkipsRefinement) {
  const std::vector<double> grid{0.5};
  const auto r = estimate_hardy_lower_bound(PowerMean{0.0}, SequenceFamily::geometric_r, grid, 1000);
  EXPECT_EQ(r.ratio_curve.size(), 1u);
  EXPECT_EQ(r.best_params[0], 0.5);
}

TEST(Estimator, Errors) {
  const std::vector<double> empty;
  const std::vector<double> geo_bad{0.5, 1.0};
  const std::vector<double> beta_bad{1.0, 2.0};
  const std::vector<double> ok{0.5};
  const std::vector<double> n_bad{0.0};
  EXPECT_THROW(estimate_hardy_lower_bound(PowerMean{0.5}, SequenceFamily::geometric_r, empty, 1000), ParameterError);
  EXPECT_THROW(estimate_hardy_lower_bound(PowerMean{0.5}, SequenceFamily::geometric_r, geo_bad, 1000), ParameterError);
  EXPECT_THROW(estimate_hardy_lower_bound(PowerMean{0.5}, SequenceFamily::powerlaw_beta, beta_bad, 1000), ParameterError);
  EXPECT_THROW(estimate_hardy_lower_bound(PowerMean{0.5}, SequenceFamily::truncharmonic_N, n_bad, 1000), ParameterError);
  EXPECT_THROW(estimate_hardy_lower_bound(PowerMean{0.5}, SequenceFamily::geometric_r, ok, 999), ParameterError);
}

TEST(Estimator, FamilyNames) {
  for (const auto f : {SequenceFamily::geometric_r, SequenceFamily::powerlaw_beta, SequenceFamily::truncharmonic_N}) {
    EXPECT_EQ(parse_family(to_string(f)), f);
  }
  EXPECT_THROW(parse_family("fibonacci"), ParseError);
}

TEST(Counterexample, FrozenPartialSums) {
  const auto a = reproduce_counterexample(10);
  EXPECT_NEAR(a.partial_sum_n, kCounterexampleSum10, 1e-12 * kCounterexampleSum10);
  EXPECT_NEAR(a.lower_bound, 100.0 * std::log(10.0), 1e-12);
  const auto b = reproduce_counterexample(100);
  EXPECT_NEAR(b.partial_sum_n, kCounterexampleSum100, 1e-12 * kCounterexampleSum100);
  EXPECT_EQ(b.n_cut, 10000u);
}

TEST(Counterexample, InequalitiesHold) {
  for (const std::size_t n : {10u, 100u, 1000u}) {
    const auto r = reproduce_counterexample(n);
    const double ln_n = std::log(static_cast<double>(n));
    EXPECT_GE(r.partial_sum_n, static_cast<double>(n * n) * ln_n);
    EXPECT_GE(r.full_ratio, 6.0 / (std::numbers::pi * std::numbers::pi) * ln_n - 0.1);
    EXPECT_TRUE(r.partial_sum_holds);
    EXPECT_TRUE(r.ratio_holds);
  }
  EXPECT_NEAR(reproduce_counterexample(1000).bound_6pi2 - 0.1, 4.0994, 1e-4);
}

TEST(Counterexample, FullRatioMatchesDirectSum) {
  const std::size_t n = 50;
  const auto r = reproduce_counterexample(n);
  const auto prefix = transform(QuasiArithmeticMean{Generator::log_linear()},
                                SequenceSpec::scaled_squares(n), 100 * n);
  long double op = 0.0L;
  long double l1 = 0.0L;
  for (std::size_t k = 1; k <= 100 * n; ++k) {
    op += prefix[k - 1];
    l1 += static_cast<long double>(n * n) / (static_cast<long double>(k) * k);
  }
  EXPECT_NEAR(r.full_ratio, static_cast<double>(op / l1), 1e-12 * r.full_ratio);
  EXPECT_THROW(reproduce_counterexample(1), ParameterError);
}

TEST(GiniLimit, MatchesHighPrecisionClosedForm) {
  const auto a = reproduce_gini_limit(0.3, 0.7, 200);
  EXPECT_LT(a.abs_err, 1e-12);
  EXPECT_NEAR(a.closed_form, 0.1666859749023905738885785, 1e-16);
  const auto b = reproduce_gini_limit(0.5, 0.25, 200);
  EXPECT_LT(b.abs_err, 1e-12);
  EXPECT_NEAR(b.closed_form, 0.08707281635817561948387657, 1e-16);
}

TEST(GiniLimit, Errors) {
  EXPECT_THROW(reproduce_gini_limit(0.5, 0.5, 200), ParameterError);
  EXPECT_THROW(reproduce_gini_limit(0.0, 0.5, 200), ParameterError);
  EXPECT_THROW(reproduce_gini_limit(0.5, 1.0, 200), ParameterError);
  EXPECT_THROW(reproduce_gini_limit(-0.5, 0.5, 200), ParameterError);
  EXPECT_THROW(reproduce_gini_limit(0.3, 0.7, 0), ParameterError);
}

}  // namespace
}  // namespace hardy
