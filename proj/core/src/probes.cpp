#include "hardy/probes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "hardy/errors.hpp"
#include "hardy/prefix.hpp"
#include "hardy/summation.hpp"

namespace hardy {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kLn2 = 0.693147180559945309417232121458176568;
constexpr double kFiniteSlope = -0.1;
constexpr double kNearlyIncreasingFloor = 0.5;
constexpr double kDSequenceBound = 2.0 + 1e-9;
constexpr std::size_t kFitPoints = 64;
constexpr std::size_t kSamplePoints = 64;
constexpr std::size_t kTailPoints = 17;

/// Rounded, deduplicated geometric grid on [lo, hi].
std::vector<std::size_t> geometric_grid(std::size_t lo, std::size_t hi, std::size_t points) {
  std::vector<std::size_t> grid;
  if (lo >= hi) return {hi};
  const double log_lo = std::log(static_cast<double>(lo));
  const double log_hi = std::log(static_cast<double>(hi));
  for (std::size_t i = 0; i < points; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(points - 1);
    auto n = static_cast<std::size_t>(std::llround(std::exp(log_lo + t * (log_hi - log_lo))));
    n = std::clamp(n, lo, hi);
    if (grid.empty() || grid.back() != n) grid.push_back(n);
  }
  return grid;
}

std::pair<std::size_t, std::size_t> growth_window(std::size_t n_max) {
  std::size_t lo = std::max<std::size_t>(100, n_max / 100);
  if (2 * lo > n_max) lo = std::max<std::size_t>(3, n_max / 16);
  return {lo, n_max};
}

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double rms = 0.0;
};

LineFit least_squares(std::span<const double> x, std::span<const double> y) {
  const auto n = static_cast<double>(x.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  LineFit f;
  f.slope = sxx > 0.0 ? sxy / sxx : 0.0;
  f.intercept = my - f.slope * mx;
  double ss = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (f.intercept + f.slope * x[i]);
    ss += r * r;
  }
  f.rms = std::sqrt(ss / n);
  return f;
}

/// Fit ln v_n = ln C + D ln ln n over the growth window; log_v is indexed from n = 1.
GrowthFit fit_growth(std::span<const double> log_v) {
  const std::size_t n_max = log_v.size();
  const auto [lo, hi] = growth_window(n_max);
  const auto grid = geometric_grid(lo, hi, kFitPoints);
  std::vector<double> x;
  std::vector<double> y;
  for (const std::size_t n : grid) {
    x.push_back(std::log(std::log(static_cast<double>(n))));
    y.push_back(log_v[n - 1]);
  }
  const LineFit line = least_squares(x, y);
  GrowthFit g;
  g.d = line.slope;
  g.c = std::exp(line.intercept);
  g.residual = line.rms;
  g.window_lo = lo;
  g.window_hi = hi;
  g.points = grid.size();
  return g;
}

DivergenceEvidence divergence(double at_half, double at_n_max, double threshold) {
  DivergenceEvidence e;
  e.at_half = at_half;
  e.at_n_max = at_n_max;
  e.growth = at_n_max / at_half;
  e.threshold = threshold;
  e.diverging = e.growth >= threshold;
  return e;
}

double tail_slope(std::span<const std::size_t> grid, std::span<const double> sums) {
  std::vector<double> x;
  std::vector<double> y;
  for (std::size_t j = 0; j + 1 < grid.size(); ++j) {
    const double inc = sums[j + 1] - sums[j];
    if (inc > 0.0) {
      x.push_back(std::log(static_cast<double>(grid[j + 1])));
      y.push_back(std::log(inc));
    }
  }
  if (x.size() < 2) return -kInf;
  return least_squares(x, y).slope;
}

}  // namespace

std::string_view to_string(ProbeVerdict v) {
  return v == ProbeVerdict::consistent_with_not_weak_hardy ? "consistent_with_not_weak_hardy"
                                                           : "inconclusive";
}

double nearly_increasing_epsilon(std::span<const double> b) {
  if (b.empty()) throw ParameterError("nearly_increasing_epsilon needs a nonempty sequence");
  double running_max = 0.0;
  double eps = 1.0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    const double x = b[i];
    if (!(x > 0.0 && std::isfinite(x))) {
      throw DomainError("ratio sequence entry " + std::to_string(i + 1) + " is not positive");
    }
    running_max = std::max(running_max, x);
    eps = std::min(eps, x / running_max);
  }
  return eps;
}

double nearly_increasing_epsilon_log(std::span<const double> log_b) {
  if (log_b.empty()) throw ParameterError("nearly_increasing_epsilon needs a nonempty sequence");
  double running_max = -kInf;
  double log_eps = 0.0;
  for (const double x : log_b) {
    if (!std::isfinite(x)) throw DomainError("ratio sequence entry is not positive and finite");
    running_max = std::max(running_max, x);
    log_eps = std::min(log_eps, x - running_max);
  }
  return std::exp(log_eps);
}

ProbeReport theorem_main_probe(const MeanSpec& mean, const SequenceSpec& seq,
                               std::span<const double> s_grid, std::size_t n_max) {
  if (s_grid.empty()) throw ParameterError("s_grid must not be empty");
  for (const double s : s_grid) {
    if (!(s > 0.0 && std::isfinite(s))) throw ParameterError("s_grid entries must be positive");
  }
  if (n_max < 16) throw ParameterError("theorem_main_probe needs n_max >= 16");

  ProbeReport report;
  report.probe_name = "theorem-main";
  report.mean = format_mean(mean);
  report.sequence = format_sequence(seq);
  report.n_max = n_max;
  report.log_b.reserve(n_max);

  const std::size_t half = n_max / 2;
  const auto tail_grid = geometric_grid(std::max<std::size_t>(1, n_max / 10), n_max, kTailPoints);
  std::vector<NeumaierSum> series(s_grid.size());
  std::vector<std::vector<double>> tail_sums(s_grid.size());
  std::size_t next_tail = 0;

  PrefixState state(mean);
  NeumaierSum l1;
  double l1_half = 0.0;
  for (std::size_t n = 1; n <= n_max; ++n) {
    state.advance(seq);
    const double log_a = seq.log_term(n);
    const double log_b = state.log_current() - log_a;
    report.log_b.push_back(log_b);
    l1.add(seq.term(n));
    if (n == half) l1_half = l1.value();
    for (std::size_t i = 0; i < s_grid.size(); ++i) {
      series[i].add(std::exp(log_a - s_grid[i] * log_b));
    }
    if (next_tail < tail_grid.size() && tail_grid[next_tail] == n) {
      for (std::size_t i = 0; i < s_grid.size(); ++i) tail_sums[i].push_back(series[i].value());
      ++next_tail;
    }
  }

  for (const std::size_t n : geometric_grid(1, n_max, kSamplePoints)) {
    report.ratio_sequence_sample.emplace_back(n, std::exp(report.log_b[n - 1]));
  }
  report.epsilon_hat = nearly_increasing_epsilon_log(report.log_b);

  const double log_n_max = std::log(static_cast<double>(n_max));
  report.series_divergence = divergence(l1_half, l1.value(), 1.0 + 1.0 / (2.0 * log_n_max));
  const double log_b_half = report.log_b[half - 1];
  const double log_b_end = report.log_b[n_max - 1];
  report.ratio_divergence = divergence(std::exp(log_b_half), std::exp(log_b_end),
                                       1.0 + kLn2 / (4.0 * log_n_max));
  // b_n may overflow as a double; its growth is taken in the log domain.
  report.ratio_divergence.growth = std::exp(log_b_end - log_b_half);
  report.ratio_divergence.diverging =
      report.ratio_divergence.growth >= report.ratio_divergence.threshold;

  bool any_finite = false;
  for (std::size_t i = 0; i < s_grid.size(); ++i) {
    SeriesEvidence e;
    e.s = s_grid[i];
    e.partial_sum = series[i].value();
    e.tail_slope = tail_slope(tail_grid, tail_sums[i]);
    e.finite = e.tail_slope <= kFiniteSlope;
    any_finite = any_finite || e.finite;
    report.condition3.push_back(e);
  }

  if (std::holds_alternative<HarmonicSequence>(seq.variant()) && n_max >= 100) {
    report.fit = fit_growth(report.log_b);
  }

  const bool cond1 = report.series_divergence.diverging;
  const bool cond2 =
      report.ratio_divergence.diverging && report.epsilon_hat >= kNearlyIncreasingFloor;
  report.verdict = cond1 && cond2 && any_finite ? ProbeVerdict::consistent_with_not_weak_hardy
                                                : ProbeVerdict::inconclusive;

  std::string notes = "finite-n evidence only; thresholds: sum a_n growth >= 1+1/(2 ln n_max), "
                      "b_n growth >= 1+ln2/(4 ln n_max), epsilon >= 0.5, tail slope <= -0.1.";
  if (!cond1) notes += " Condition (1) not supported: sum a_n does not grow.";
  if (!cond2) notes += " Condition (2) not supported: b_n not visibly divergent or not nearly increasing.";
  if (!any_finite) notes += " Condition (3) not supported for any s in the grid.";
  report.notes = std::move(notes);
  return report;
}

GrowthFit log_growth_fit(const MeanSpec& mean, std::size_t n_max) {
  if (n_max < 100) throw ParameterError("log_growth_fit needs n_max >= 100");
  const SequenceSpec harmonic = SequenceSpec::harmonic();
  PrefixState state(mean);
  std::vector<double> log_v;
  log_v.reserve(n_max);
  for (std::size_t n = 1; n <= n_max; ++n) {
    state.advance(harmonic);
    log_v.push_back(std::log(static_cast<double>(n)) + state.log_current());
  }
  return fit_growth(log_v);
}

DSequenceResult d_sequence_check(const MeanSpec& mean, std::size_t n_max) {
  if (n_max < 1) throw ParameterError("d_sequence_check needs n_max >= 1");
  DSequenceResult r;
  r.d.reserve(n_max);
  std::vector<double> v;
  double running_max = 0.0;
  for (std::size_t n = 1; n <= n_max; ++n) {
    v.resize(n);
    const auto nd = static_cast<double>(n);
    for (std::size_t k = 1; k <= n; ++k) v[k - 1] = nd / static_cast<double>(k);
    const double d = eval(mean, v);
    r.d.push_back(d);
    running_max = std::max(running_max, d);
    r.max_violation = std::max(r.max_violation, running_max / d);
  }
  r.passed = r.max_violation <= kDSequenceBound;
  return r;
}

MulhollandResult mulholland_search(const Generator& gen, std::span<const double> alpha_grid,
                                   int trials, std::uint64_t seed, SamplingRange range) {
  if (alpha_grid.empty()) throw ParameterError("alpha grid must not be empty");
  for (const double alpha : alpha_grid) {
    if (!(alpha < 1.0) || !std::isfinite(alpha)) {
      throw ParameterError("Mulholland domination needs every alpha < 1");
    }
  }
  if (trials < 1) throw ParameterError("trials must be at least 1");
  const Interval d = gen.domain();
  const double lo = std::max(range.lo, d.lo > 0 ? d.lo * (1 + 1e-9) : range.lo);
  const double hi = std::min(range.hi, std::isfinite(d.hi) ? d.hi * (1 - 1e-9) : range.hi);
  if (!(lo > 0.0 && lo < hi)) throw ParameterError("sampling range does not meet the domain");

  const MeanSpec qa = QuasiArithmeticMean{gen};
  MulhollandResult result;
  for (const double alpha : alpha_grid) {
    const MeanSpec power = PowerMean{alpha};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> length(1, 64);
    std::uniform_real_distribution<double> entry(std::log(lo), std::log(hi));
    MulhollandCandidate best{alpha, 0.0, {}};
    std::vector<double> a;
    for (int t = 0; t < trials; ++t) {
      a.resize(static_cast<std::size_t>(length(rng)));
      for (double& x : a) x = std::exp(entry(rng));
      const double ratio = eval(qa, a) / eval(power, a);
      if (ratio > best.empirical_c) {
        best.empirical_c = ratio;
        best.witness = a;
      }
    }
    result.candidates.push_back(std::move(best));
  }
  const auto best = std::min_element(
      result.candidates.begin(), result.candidates.end(),
      [](const auto& x, const auto& y) { return x.empirical_c < y.empirical_c; });
  result.best_alpha = best->alpha;
  result.best_c = best->empirical_c;
  return result;
}

}  // namespace hardy
