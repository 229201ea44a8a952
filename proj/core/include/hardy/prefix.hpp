#pragma once

#include <cstddef>
#include <vector>

#include "hardy/accumulator.hpp"
#include "hardy/mean.hpp"
#include "hardy/sequence.hpp"

namespace hardy {

/// Streaming M-averaging operator: after n pushes, current() is
/// M(a_1, ..., a_n). Single owner; O(1) per push.
class PrefixState {
 public:
  explicit PrefixState(MeanSpec mean) : mean_(std::move(mean)), acc_(mean_) {}

  void push(double a) { acc_.push(a); }
  void push_log(double log_a) { acc_.push_log(log_a); }
  /// Pushes term count()+1 of `seq`. Terms below the smallest normal double
  /// are pushed through their logarithm.
  void advance(const SequenceSpec& seq);

  std::size_t count() const noexcept { return acc_.count(); }
  double current() const { return acc_.value(); }
  double log_current() const { return acc_.log_value(); }
  const MeanSpec& mean() const noexcept { return mean_; }

 private:
  MeanSpec mean_;
  MeanAccumulator acc_;
};

/// (M(a_1), M(a_1, a_2), ..., M(a_1, ..., a_{n_max})).
std::vector<double> transform(const MeanSpec& mean, const SequenceSpec& seq, std::size_t n_max);

/// k-th entry is M(a_1^p, ..., a_k^p)^(1/p). Requires p > 1.
std::vector<double> conjugate_transform(const MeanSpec& mean, double p, const SequenceSpec& seq,
                                        std::size_t n_max);

struct HardyRatio {
  double operator_sum = 0.0;  ///< sum_{n <= n_max} M(a_1, ..., a_n)
  double l1_sum = 0.0;        ///< sum_{n <= n_max} a_n
  double ratio = 0.0;
};

/// Partial Hardy ratio with compensated sums. Not monotone in n_max in general.
HardyRatio hardy_ratio(const MeanSpec& mean, const SequenceSpec& seq, std::size_t n_max);

}  // namespace hardy
