#pragma once

// Small hand-rolled generators for property tests. Every case draws from one
// seeded engine so a failing case can be replayed from (seed, index).

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "hardy/mean.hpp"

namespace hardy::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }

  std::size_t size(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }

  std::vector<double> vector(std::size_t min_len, std::size_t max_len, double lo, double hi) {
    std::vector<double> v(size(min_len, max_len));
    for (auto& x : v) x = log_uniform(lo, hi);
    return v;
  }

  // Parameters on a 0.1 lattice hit the interesting exact cases (0, equal p and q)
  // often enough; the continuous draw covers the rest.
  double parameter(double lo, double hi) {
    if (size(0, 2) == 0) return std::round(uniform(lo, hi) * 10.0) / 10.0;
    return uniform(lo, hi);
  }

  MeanSpec mean() {
    switch (size(0, 3)) {
      case 0: return PowerMean{parameter(-3.0, 3.0)};
      case 1: return GiniMean{parameter(-2.0, 2.0), parameter(-2.0, 2.0)};
      case 2: return QuasiArithmeticMean{Generator::power(parameter(-2.0, 2.0))};
      default: return QuasiArithmeticMean{Generator::log_linear()};
    }
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline double rel_diff(double a, double b) {
  if (a == b) return 0.0;
  return std::fabs(a - b) / std::max(std::fabs(a), std::fabs(b));
}

// Straightforward long double formulas, used as the reference the library's
// shifted and compensated evaluation must agree with.
inline long double naive_power(double alpha, const std::vector<double>& a) {
  long double s = 0.0L;
  const auto n = static_cast<long double>(a.size());
  if (alpha == 0.0) {
    for (const double x : a) s += std::log(static_cast<long double>(x));
    return std::exp(s / n);
  }
  for (const double x : a) s += std::pow(static_cast<long double>(x), static_cast<long double>(alpha));
  return std::pow(s / n, 1.0L / static_cast<long double>(alpha));
}

inline long double naive_gini(double p, double q, const std::vector<double>& a) {
  long double num = 0.0L;
  long double den = 0.0L;
  if (p == q) {
    for (const double x : a) {
      const long double w = std::pow(static_cast<long double>(x), static_cast<long double>(p));
      num += w * std::log(static_cast<long double>(x));
      den += w;
    }
    return std::exp(num / den);
  }
  for (const double x : a) {
    num += std::pow(static_cast<long double>(x), static_cast<long double>(p));
    den += std::pow(static_cast<long double>(x), static_cast<long double>(q));
  }
  return std::pow(num / den, 1.0L / static_cast<long double>(p - q));
}

}  // namespace hardy::testing
