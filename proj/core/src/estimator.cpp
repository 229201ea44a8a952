#include "hardy/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "hardy/errors.hpp"
#include "hardy/format.hpp"
#include "hardy/prefix.hpp"
#include "hardy/summation.hpp"

namespace hardy {

namespace {

constexpr std::size_t kMinSearchLength = 1000;
constexpr double kTailDeltaFactor = 1e-9;
constexpr std::size_t kTruncatedTailFactor = 4;
constexpr double kGoldenRatio = 0.618033988749894848204586834365638118;

std::size_t checked_count(double param) {
  if (!(param >= 1.0 && std::isfinite(param))) {
    throw ParameterError("truncharmonic N must be >= 1, got " + format_shortest(param));
  }
  return static_cast<std::size_t>(std::llround(param));
}

// Memoized ratio evaluation; integer families key on the rounded parameter.
class RatioCache {
 public:
  RatioCache(const MeanSpec& mean, SequenceFamily family, std::size_t n_max)
      : mean_(mean), family_(family), n_max_(n_max) {}

  double operator()(double param) {
    const double key = family_ == SequenceFamily::truncharmonic_N
                           ? static_cast<double>(checked_count(param))
                           : param;
    if (const auto it = cache_.find(key); it != cache_.end()) return it->second;
    const auto [seq, length] = family_member(family_, key, n_max_);
    used_ = std::max(used_, length);
    const double r = hardy_ratio(mean_, seq, length).ratio;
    cache_.emplace(key, r);
    return r;
  }

  const std::map<double, double>& curve() const noexcept { return cache_; }
  std::size_t used() const noexcept { return used_; }

 private:
  const MeanSpec& mean_;
  SequenceFamily family_;
  std::size_t n_max_;
  std::size_t used_ = 0;
  std::map<double, double> cache_;
};

}  // namespace

std::string_view to_string(SequenceFamily f) {
  switch (f) {
    case SequenceFamily::geometric_r: return "geometric_r";
    case SequenceFamily::powerlaw_beta: return "powerlaw_beta";
    case SequenceFamily::truncharmonic_N: return "truncharmonic_N";
  }
  return "unknown";
}

SequenceFamily parse_family(std::string_view name) {
  for (const auto f : {SequenceFamily::geometric_r, SequenceFamily::powerlaw_beta,
                       SequenceFamily::truncharmonic_N}) {
    if (to_string(f) == name) return f;
  }
  throw ParseError("unknown sequence family; expected geometric_r, powerlaw_beta or truncharmonic_N",
                   std::string(name));
}

std::pair<SequenceSpec, std::size_t> family_member(SequenceFamily family, double param,
                                                   std::size_t n_max) {
  switch (family) {
    case SequenceFamily::geometric_r:
      if (!(param > 0.0 && param < 1.0)) {
        throw ParameterError("geometric_r needs r in (0, 1) for a summable sequence, got " +
                             format_shortest(param));
      }
      return {SequenceSpec::geometric(1.0, param), n_max};
    case SequenceFamily::powerlaw_beta:
      if (!(param > 1.0 && std::isfinite(param))) {
        throw ParameterError("powerlaw_beta needs beta > 1 for a summable sequence, got " +
                             format_shortest(param));
      }
      return {SequenceSpec::power_law(1.0, param), n_max};
    case SequenceFamily::truncharmonic_N: {
      const std::size_t n = checked_count(param);
      const double delta = kTailDeltaFactor / static_cast<double>(n);
      // For means whose operator tail never dies out (Power(1) gives H_N / n
      // after N) the ratio depends on the cut, so every member is cut at the
      // same multiple of N.
      return {SequenceSpec::truncated_harmonic(n, delta), kTruncatedTailFactor * n};
    }
  }
  throw ParameterError("unknown sequence family");
}

FamilySearchResult estimate_hardy_lower_bound(const MeanSpec& mean, SequenceFamily family,
                                              std::span<const double> grid, std::size_t n_max) {
  if (grid.empty()) throw ParameterError("parameter grid must not be empty");
  if (n_max < kMinSearchLength) throw ParameterError("estimator needs n_max >= 1000");
  std::vector<double> params(grid.begin(), grid.end());
  std::sort(params.begin(), params.end());
  params.erase(std::unique(params.begin(), params.end()), params.end());
  // Validate the whole grid before spending time on any point.
  for (const double p : params) (void)family_member(family, p, n_max);

  RatioCache ratio(mean, family, n_max);
  std::size_t best = 0;
  double best_ratio = -1.0;
  for (std::size_t i = 0; i < params.size(); ++i) {
    const double r = ratio(params[i]);
    if (r > best_ratio) {
      best_ratio = r;
      best = i;
    }
  }

  if (params.size() > 1) {
    double lo = params[best > 0 ? best - 1 : best];
    double hi = params[best + 1 < params.size() ? best + 1 : best];
    const double step = std::max(params[best] - lo, hi - params[best]);
    const double tol = std::max(step / 16.0, family == SequenceFamily::truncharmonic_N ? 1.0 : 0.0);
    double x1 = hi - kGoldenRatio * (hi - lo);
    double x2 = lo + kGoldenRatio * (hi - lo);
    double f1 = ratio(x1);
    double f2 = ratio(x2);
    while (hi - lo > tol) {
      if (f1 < f2) {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + kGoldenRatio * (hi - lo);
        f2 = ratio(x2);
      } else {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - kGoldenRatio * (hi - lo);
        f1 = ratio(x1);
      }
    }
  }

  FamilySearchResult result;
  result.family = std::string(to_string(family));
  result.mean = format_mean(mean);
  result.ratio_curve.assign(ratio.curve().begin(), ratio.curve().end());
  const auto top = std::max_element(result.ratio_curve.begin(), result.ratio_curve.end(),
                                    [](const auto& a, const auto& b) { return a.second < b.second; });
  result.best_params = {top->first};
  result.best_ratio = top->second;
  result.n_max_used = ratio.used();
  return result;
}

CounterexampleResult reproduce_counterexample(std::size_t n) {
  if (n < 2) throw ParameterError("counterexample needs N >= 2");
  const SequenceSpec seq = SequenceSpec::scaled_squares(n);
  PrefixState state(QuasiArithmeticMean{Generator::log_linear()});
  CounterexampleResult r;
  r.n = n;
  r.n_cut = 100 * n;
  NeumaierSum op;
  NeumaierSum l1;
  for (std::size_t k = 1; k <= r.n_cut; ++k) {
    state.advance(seq);
    op.add(state.current());
    l1.add(seq.term(k));
    if (k == n) r.partial_sum_n = op.value();
  }
  const double ln_n = std::log(static_cast<double>(n));
  const double n_sq = static_cast<double>(n) * static_cast<double>(n);
  r.lower_bound = n_sq * ln_n;
  r.full_ratio = op.value() / l1.value();
  r.bound_6pi2 = 6.0 / (std::numbers::pi * std::numbers::pi) * ln_n;
  r.partial_sum_holds = r.partial_sum_n >= r.lower_bound;
  r.ratio_holds = r.full_ratio >= r.bound_6pi2 - 0.1;
  return r;
}

GiniLimitResult reproduce_gini_limit(double p, double q, std::size_t n) {
  if (!(p > 0.0 && p < 1.0 && q > 0.0 && q < 1.0) || p == q) {
    throw ParameterError("gini limit needs distinct p, q in (0, 1)");
  }
  if (n < 1) throw ParameterError("gini limit needs n >= 1");
  const SequenceSpec seq = SequenceSpec::geometric(1.0, 0.5);
  PrefixState state(GiniMean{p, q});
  for (std::size_t k = 1; k <= n; ++k) state.advance(seq);
  GiniLimitResult r;
  r.prefix_mean = state.current();
  const double ln2 = std::numbers::ln2;
  // 1 - 2^-x without cancellation.
  const double num = -std::expm1(-q * ln2);
  const double den = -std::expm1(-p * ln2);
  r.closed_form = std::exp(std::log(num / den) / (p - q));
  r.abs_err = std::fabs(r.prefix_mean - r.closed_form);
  return r;
}

}  // namespace hardy
