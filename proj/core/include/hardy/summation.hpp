#pragma once

#include <cmath>
#include <limits>

namespace hardy {

/// Neumaier (improved Kahan-Babuska) compensated accumulator.
class NeumaierSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }

  /// Multiplies the running total (and its compensation) by `factor`.
  void scale(double factor) noexcept {
    sum_ *= factor;
    comp_ *= factor;
  }

  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// Accumulates log(sum exp(t_i)) without overflow. The running sum is kept
/// relative to the largest exponent seen so far and rescaled when it grows.
class LogSumExp {
 public:
  void add(double t) noexcept {
    if (t > shift_) {
      rel_.scale(std::exp(shift_ - t));
      shift_ = t;
    }
    rel_.add(std::exp(t - shift_));
  }

  /// -inf when empty.
  double value() const noexcept { return shift_ + std::log(rel_.value()); }

 private:
  double shift_ = -std::numeric_limits<double>::infinity();
  NeumaierSum rel_;
};

}  // namespace hardy
