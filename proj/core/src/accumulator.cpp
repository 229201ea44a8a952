#include "hardy/accumulator.hpp"

#include <algorithm>
#include <cmath>

#include "hardy/errors.hpp"
#include "hardy/format.hpp"
#include "overloaded.hpp"

namespace hardy {

using detail::overloaded;

namespace {

// The log1p route is used only while sum a^p / sum a^q stays within [0.5, 1.5];
// outside that band the two log-sum-exp totals differ enough to subtract safely.
constexpr double kDiffRouteBand = 0.5;

[[noreturn]] void throw_nonpositive(double x) {
  throw DomainError("entry " + format_shortest(x) +
                    " is not a finite strictly positive number");
}

}  // namespace

void MeanAccumulator::RatioState::push_log(double x) {
  lse_p.add(p * x);
  lse_q.add(q * x);
  const double t = q * x;
  if (t > shift) {
    const double factor = std::exp(shift - t);
    weights.scale(factor);
    diff.scale(factor);
    shift = t;
  }
  const double w = std::exp(t - shift);
  weights.add(w);
  if (diff_ok) {
    const double term = w * std::expm1((p - q) * x);
    if (std::isfinite(term)) {
      diff.add(term);
      diff_ok = std::isfinite(diff.value());
    } else {
      diff_ok = false;
    }
  }
}

double MeanAccumulator::RatioState::log_mean() const {
  const double delta = p - q;
  if (diff_ok) {
    const double r = diff.value() / weights.value();
    if (std::isfinite(r) && std::fabs(r) <= kDiffRouteBand) return std::log1p(r) / delta;
  }
  return (lse_p.value() - lse_q.value()) / delta;
}

void MeanAccumulator::WeightedLogState::push_log(double x) {
  const double t = p * x;
  if (t > shift) {
    const double factor = std::exp(shift - t);
    weights.scale(factor);
    weighted_logs.scale(factor);
    shift = t;
  }
  const double w = std::exp(t - shift);
  weights.add(w);
  weighted_logs.add(w * x);
}

double MeanAccumulator::WeightedLogState::log_mean() const {
  return weighted_logs.value() / weights.value();
}

namespace {

// Power and Gini means reduce to a ratio of power sums (p != q) or the
// weighted log average (p == q).
struct PowerSumShape {
  double p = 0.0;
  double q = 0.0;
};

PowerSumShape power_sum_shape(const MeanSpec& mean) {
  return std::visit(overloaded{
                        [](const PowerMean& m) { return PowerSumShape{m.alpha, 0.0}; },
                        [](const GiniMean& m) {
                          if (std::fabs(m.p - m.q) <= kGiniDegenerateGap) {
                            const double mid = 0.5 * (m.p + m.q);
                            return PowerSumShape{mid, mid};
                          }
                          return PowerSumShape{m.p, m.q};
                        },
                        [](const QuasiArithmeticMean& m) {
                          return PowerSumShape{*m.generator.power_exponent(), 0.0};
                        },
                    },
                    mean);
}

void check_parameters(const MeanSpec& mean) {
  const bool ok = std::visit(
      overloaded{
          [](const PowerMean& m) { return std::isfinite(m.alpha); },
          [](const GiniMean& m) { return std::isfinite(m.p) && std::isfinite(m.q); },
          [](const QuasiArithmeticMean&) { return true; },
      },
      mean);
  if (!ok) throw ParameterError("mean parameters must be finite");
}

}  // namespace

MeanAccumulator::MeanAccumulator(const MeanSpec& mean) : state_(WeightedLogState{}) {
  check_parameters(mean);
  const auto* qa = std::get_if<QuasiArithmeticMean>(&mean);
  if (qa != nullptr && !qa->generator.power_exponent()) {
    state_ = QuasiState{qa->generator, {}};
    return;
  }
  const PowerSumShape shape = power_sum_shape(mean);
  if (shape.p == shape.q) {
    WeightedLogState s;
    s.p = shape.p;
    state_ = s;
  } else {
    RatioState s;
    s.p = shape.p;
    s.q = shape.q;
    state_ = s;
  }
}

void MeanAccumulator::track(double x, double log_x) noexcept {
  ++count_;
  min_value_ = std::min(min_value_, x);
  max_value_ = std::max(max_value_, x);
  min_log_ = std::min(min_log_, log_x);
  max_log_ = std::max(max_log_, log_x);
}

void MeanAccumulator::push(double x) {
  if (auto* qa = std::get_if<QuasiState>(&state_)) {
    qa->sum.add(qa->generator.forward(x));
    track(x, std::log(x));
    return;
  }
  if (!(x > 0.0 && std::isfinite(x))) throw_nonpositive(x);
  const double log_x = std::log(x);
  std::visit(overloaded{[log_x](RatioState& s) { s.push_log(log_x); },
                        [log_x](WeightedLogState& s) { s.push_log(log_x); },
                        [](QuasiState&) {}},
             state_);
  track(x, log_x);
}

void MeanAccumulator::push_log(double log_x) {
  if (auto* qa = std::get_if<QuasiState>(&state_)) {
    qa->sum.add(qa->generator.forward_log(log_x));
    track(std::exp(log_x), log_x);
    return;
  }
  if (!std::isfinite(log_x)) throw_nonpositive(std::exp(log_x));
  std::visit(overloaded{[log_x](RatioState& s) { s.push_log(log_x); },
                        [log_x](WeightedLogState& s) { s.push_log(log_x); },
                        [](QuasiState&) {}},
             state_);
  track(std::exp(log_x), log_x);
}

void MeanAccumulator::require_nonempty() const {
  if (count_ == 0) throw ParameterError("mean of an empty vector is undefined");
}

double MeanAccumulator::value() const {
  require_nonempty();
  double raw = 0.0;
  if (const auto* qa = std::get_if<QuasiState>(&state_)) {
    raw = qa->generator.inverse(qa->sum.value() / static_cast<double>(count_));
  } else {
    raw = std::exp(log_value());
  }
  return std::clamp(raw, min_value_, max_value_);
}

double MeanAccumulator::log_value() const {
  require_nonempty();
  const double raw = std::visit(
      overloaded{[](const RatioState& s) { return s.log_mean(); },
                 [](const WeightedLogState& s) { return s.log_mean(); },
                 [this](const QuasiState& s) {
                   return s.generator.log_inverse(s.sum.value() / static_cast<double>(count_));
                 }},
      state_);
  return std::clamp(raw, min_log_, max_log_);
}

}  // namespace hardy
