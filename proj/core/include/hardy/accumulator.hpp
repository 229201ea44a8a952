#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <variant>

#include "hardy/mean.hpp"
#include "hardy/summation.hpp"

namespace hardy {

/// Running state that yields M(a_1, ..., a_n) after every push.
///
/// Power and Gini means are accumulated in the log domain, so terms may be
/// pushed either as values or as natural logarithms; the latter reaches terms
/// that underflow as doubles. Quasi-arithmetic means over a power generator are
/// routed to the power-mean state.
class MeanAccumulator {
 public:
  explicit MeanAccumulator(const MeanSpec& mean);

  void push(double x);
  void push_log(double log_x);

  std::size_t count() const noexcept { return count_; }
  /// Throws ParameterError before the first push.
  double value() const;
  double log_value() const;

 private:
  // sum a^p / sum a^q for p != q. Keeps two independent log-sum-exp totals
  // and, for the well-conditioned case, a shifted sum of a^q (a^(p-q) - 1)
  // that avoids cancellation when p and q are close.
  struct RatioState {
    double p = 0.0;
    double q = 0.0;
    LogSumExp lse_p;
    LogSumExp lse_q;
    double shift = -std::numeric_limits<double>::infinity();
    NeumaierSum weights;
    NeumaierSum diff;
    bool diff_ok = true;

    void push_log(double x);
    double log_mean() const;
  };

  // exp(sum a^p ln a / sum a^p), weights shifted by the largest p ln a.
  struct WeightedLogState {
    double p = 0.0;
    double shift = -std::numeric_limits<double>::infinity();
    NeumaierSum weights;
    NeumaierSum weighted_logs;

    void push_log(double x);
    double log_mean() const;
  };

  struct QuasiState {
    Generator generator;
    NeumaierSum sum;
  };

  void track(double x, double log_x) noexcept;
  void require_nonempty() const;

  std::variant<RatioState, WeightedLogState, QuasiState> state_;
  std::size_t count_ = 0;
  double min_value_ = std::numeric_limits<double>::infinity();
  double max_value_ = -std::numeric_limits<double>::infinity();
  double min_log_ = std::numeric_limits<double>::infinity();
  double max_log_ = -std::numeric_limits<double>::infinity();
};

}  // namespace hardy
