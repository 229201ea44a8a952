#include "hardy/prefix.hpp"

#include <cmath>
#include <limits>

#include "hardy/errors.hpp"
#include "hardy/summation.hpp"

namespace hardy {

namespace {

void require_length(std::size_t n_max) {
  if (n_max < 1) throw ParameterError("n_max must be at least 1");
}

}  // namespace

void PrefixState::advance(const SequenceSpec& seq) {
  const std::size_t n = count() + 1;
  const double a = seq.term(n);
  if (a >= std::numeric_limits<double>::min()) {
    push(a);
  } else {
    push_log(seq.log_term(n));
  }
}

std::vector<double> transform(const MeanSpec& mean, const SequenceSpec& seq, std::size_t n_max) {
  require_length(n_max);
  PrefixState state(mean);
  std::vector<double> out;
  out.reserve(n_max);
  for (std::size_t n = 1; n <= n_max; ++n) {
    state.advance(seq);
    out.push_back(state.current());
  }
  return out;
}

std::vector<double> conjugate_transform(const MeanSpec& mean, double p, const SequenceSpec& seq,
                                        std::size_t n_max) {
  if (!(p > 1.0 && std::isfinite(p))) {
    throw ParameterError("conjugate exponent p must be a finite number > 1");
  }
  require_length(n_max);
  PrefixState state(mean);
  std::vector<double> out;
  out.reserve(n_max);
  for (std::size_t n = 1; n <= n_max; ++n) {
    const double a = seq.term(n);
    const double a_p = std::pow(a, p);
    if (a_p >= std::numeric_limits<double>::min() && std::isfinite(a_p)) {
      state.push(a_p);
    } else {
      state.push_log(p * seq.log_term(n));
    }
    const double m = state.current();
    out.push_back(m >= std::numeric_limits<double>::min() && std::isfinite(m)
                      ? std::pow(m, 1.0 / p)
                      : std::exp(state.log_current() / p));
  }
  return out;
}

HardyRatio hardy_ratio(const MeanSpec& mean, const SequenceSpec& seq, std::size_t n_max) {
  require_length(n_max);
  PrefixState state(mean);
  NeumaierSum op;
  NeumaierSum l1;
  for (std::size_t n = 1; n <= n_max; ++n) {
    state.advance(seq);
    op.add(state.current());
    l1.add(seq.term(n));
  }
  HardyRatio r;
  r.operator_sum = op.value();
  r.l1_sum = l1.value();
  r.ratio = r.operator_sum / r.l1_sum;
  return r;
}

}  // namespace hardy
