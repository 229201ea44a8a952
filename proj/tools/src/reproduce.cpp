#include "reproduce.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <utility>

#include "hardy/axioms.hpp"
#include "hardy/classification.hpp"
#include "hardy/errors.hpp"
#include "hardy/estimator.hpp"
#include "hardy/mean.hpp"
#include "hardy/prefix.hpp"
#include "hardy/probes.hpp"

namespace hardy::cli {

namespace {

constexpr std::uint64_t kSeed = 20240607;

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

std::size_t scaled(double base, double scale, std::size_t floor) {
  return std::max(floor, static_cast<std::size_t>(std::llround(base * scale)));
}

double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
  return std::exp(u(rng));
}

double rel_diff(double a, double b) {
  if (a == b) return 0.0;
  return std::fabs(a - b) / std::max(std::fabs(a), std::fabs(b));
}

ReproduceItem power_constants(double) {
  const double c_half = *classify_power(0.5).hardy_constant;
  const double c_zero = *classify_power(0.0).hardy_constant;
  const double c_neg = *classify_power(-1.0).hardy_constant;
  const double c_one = *classify_power(1.0).hardy_constant;
  const double c_two = *classify_power(2.0).hardy_constant;
  ReproduceItem item;
  item.passed = c_half == 4.0 && std::fabs(c_zero - std::numbers::e) <= 1e-15 && c_neg == 2.0 &&
                std::isinf(c_one) && std::isinf(c_two) && classify_power(1.0).weak_hardy == Verdict::no;
  item.observed = "H(P_0.5)=" + num(c_half) + " H(P_0)=" + num(c_zero) + " H(P_-1)=" + num(c_neg) +
                  " H(P_1)=" + num(c_one) + " H(P_2)=" + num(c_two);
  item.expected = "4, e within 1e-15, 2, inf, inf";
  return item;
}

ReproduceItem hardy_bound(double scale) {
  const std::size_t count = scaled(1000, scale, 20);
  std::mt19937_64 rng(kSeed);
  std::uniform_int_distribution<std::size_t> len(1, 200);
  double worst_excess = -std::numeric_limits<double>::infinity();
  std::ostringstream obs;
  for (const double alpha : {-1.0, 0.0, 0.5}) {
    const double h = *classify_power(alpha).hardy_constant;
    double worst = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
      std::vector<double> v(len(rng));
      for (auto& x : v) x = log_uniform(rng, 1e-6, 10.0);
      const std::size_t n = v.size();
      const double r = hardy_ratio(PowerMean{alpha}, SequenceSpec::explicit_values(std::move(v)), n).ratio;
      worst = std::max(worst, r);
    }
    worst_excess = std::max(worst_excess, worst - h);
    obs << "alpha=" << num(alpha) << " max ratio " << num(worst) << " (H=" << num(h) << "); ";
  }
  ReproduceItem item;
  item.passed = worst_excess <= 1e-9;
  item.observed = obs.str() + std::to_string(count) + " sequences per alpha";
  item.expected = "every ratio <= H + 1e-9";
  return item;
}

ReproduceItem near_extremal(double scale) {
  std::ostringstream obs;
  bool ok = true;
  for (const double alpha : {0.5, 0.0}) {
    const double h = *classify_power(alpha).hardy_constant;
    double prev = 0.0;
    bool increasing = true;
    obs << "alpha=" << num(alpha) << ":";
    for (const double base : {1e3, 1e4, 1e5, 1e6}) {
      const double n = static_cast<double>(scaled(base, scale, 10));
      const auto [seq, length] = family_member(SequenceFamily::truncharmonic_N, n, 1);
      const double r = hardy_ratio(PowerMean{alpha}, seq, length).ratio;
      increasing = increasing && r > prev;
      prev = r;
      obs << ' ' << num(r);
    }
    ok = ok && increasing && prev >= 0.7 * h && prev <= h;
    obs << (alpha == 0.5 ? "; " : "");
  }
  ReproduceItem item;
  item.passed = ok;
  item.observed = obs.str();
  item.expected = "strictly increasing in N, final ratio in [0.7 H, H] with H = 4 and e";
  return item;
}

ReproduceItem gini_limit(double) {
  std::ostringstream obs;
  bool ok = true;
  for (const auto& [p, q] : {std::pair{0.3, 0.7}, std::pair{0.5, 0.25}}) {
    const GiniLimitResult r = reproduce_gini_limit(p, q, 200);
    ok = ok && r.abs_err < 1e-12;
    obs << "(" << num(p) << "," << num(q) << ") prefix " << num(r.prefix_mean) << " limit "
        << num(r.closed_form) << " err " << num(r.abs_err) << "; ";
  }
  ReproduceItem item;
  item.passed = ok;
  item.observed = obs.str();
  item.expected = "abs_err < 1e-12 at n = 200";
  return item;
}

ReproduceItem counterexample(double scale) {
  std::ostringstream obs;
  bool ok = true;
  for (const double base : {10.0, 100.0, 1000.0}) {
    const CounterexampleResult r = reproduce_counterexample(scaled(base, scale, 2));
    ok = ok && r.partial_sum_holds && r.ratio_holds;
    obs << "N=" << r.n << " sum " << num(r.partial_sum_n) << " >= " << num(r.lower_bound)
        << ", ratio " << num(r.full_ratio) << " >= " << num(r.bound_6pi2 - 0.1) << "; ";
  }
  ReproduceItem item;
  item.passed = ok;
  item.observed = obs.str();
  item.expected = "sum_{n<=N} >= N^2 ln N and ratio >= (6/pi^2) ln N - 0.1";
  return item;
}

ReproduceItem d_sequence(double) {
  std::ostringstream obs;
  bool ok = true;
  const MeanSpec means[] = {PowerMean{-1.0}, PowerMean{0.0}, PowerMean{0.5}, GiniMean{1.0, -1.0},
                            GiniMean{0.5, -0.5}};
  for (const auto& m : means) {
    const DSequenceResult r = d_sequence_check(m, 300);
    ok = ok && r.passed;
    obs << format_mean(m) << " max d_m/d_n " << num(r.max_violation) << "; ";
  }
  ReproduceItem item;
  item.passed = ok;
  item.observed = obs.str();
  item.expected = "d_m <= 2 d_n + 1e-9 for m <= n <= 300";
  return item;
}

ReproduceItem log_growth(double scale) {
  const std::size_t n_max = scaled(1e6, scale, 1000);
  const GrowthFit gini = log_growth_fit(GiniMean{1.0, -1.0}, n_max);
  const GrowthFit power = log_growth_fit(PowerMean{1.0}, n_max);
  ReproduceItem item;
  item.passed = gini.d >= 0.4 && gini.d <= 0.6 && gini.residual < 0.05 && power.d >= 0.9 &&
                power.d <= 1.1;
  item.observed = "n_max=" + std::to_string(n_max) + " gini:1,-1 D=" + num(gini.d) +
                  " residual " + num(gini.residual) + "; power:1 D=" + num(power.d);
  item.expected = "gini D in [0.4, 0.6] with residual < 0.05; power D in [0.9, 1.1]";
  return item;
}

ReproduceItem classification_grid(double) {
  std::size_t mismatches = 0;
  std::size_t points = 0;
  for (int i = -20; i <= 20; ++i) {
    for (int j = -20; j <= 20; ++j) {
      const double p = i / 10.0;
      const double q = j / 10.0;
      const ClassificationResult r = classify_gini(p, q);
      const bool predicate = std::min(p, q) <= 0.0 && std::max(p, q) < 1.0;
      const bool ok = r.hardy == (predicate ? Verdict::yes : Verdict::no) &&
                      r.weak_hardy == r.hardy &&
                      r.monotone == (p * q <= 0.0 ? Verdict::yes : Verdict::no);
      mismatches += ok ? 0 : 1;
      ++points;
    }
  }
  ReproduceItem item;
  item.passed = mismatches == 0;
  item.observed = std::to_string(mismatches) + " mismatches on " + std::to_string(points) + " points";
  item.expected = "0 mismatches";
  return item;
}

double naive_gini(double p, double q, const std::vector<double>& a) {
  long double num_sum = 0.0L;
  long double den_sum = 0.0L;
  if (p == q) {
    for (const double x : a) {
      const long double w = std::pow(static_cast<long double>(x), static_cast<long double>(p));
      num_sum += w * std::log(static_cast<long double>(x));
      den_sum += w;
    }
    return static_cast<double>(std::exp(num_sum / den_sum));
  }
  for (const double x : a) {
    num_sum += std::pow(static_cast<long double>(x), static_cast<long double>(p));
    den_sum += std::pow(static_cast<long double>(x), static_cast<long double>(q));
  }
  return static_cast<double>(std::pow(num_sum / den_sum, 1.0L / static_cast<long double>(p - q)));
}

ReproduceItem streaming(double scale) {
  const std::size_t pairs = scaled(500, scale, 20);
  const std::vector<MeanSpec> catalog = reference_means();
  std::mt19937_64 rng(kSeed + 1);
  std::uniform_int_distribution<std::size_t> pick(0, catalog.size() - 1);
  std::uniform_int_distribution<std::size_t> len(1, 64);
  double worst_stream = 0.0;
  for (std::size_t i = 0; i < pairs; ++i) {
    const MeanSpec& m = catalog[pick(rng)];
    std::vector<double> v(len(rng));
    for (auto& x : v) x = log_uniform(rng, 1e-3, 1e3);
    const std::vector<double> streamed =
        transform(m, SequenceSpec::explicit_values(v), v.size());
    for (std::size_t k = 1; k <= v.size(); ++k) {
      const double batch = eval(m, std::span<const double>(v.data(), k));
      worst_stream = std::max(worst_stream, rel_diff(streamed[k - 1], batch));
    }
  }
  double worst_naive = 0.0;
  std::uniform_int_distribution<std::size_t> small_len(1, 12);
  for (const auto& m : catalog) {
    const auto* g = std::get_if<GiniMean>(&m);
    if (g == nullptr) continue;
    for (int t = 0; t < 50; ++t) {
      std::vector<double> v(small_len(rng));
      for (auto& x : v) x = log_uniform(rng, 0.25, 4.0);
      worst_naive = std::max(worst_naive, rel_diff(eval(m, v), naive_gini(g->p, g->q, v)));
    }
  }
  ReproduceItem item;
  item.passed = worst_stream <= 1e-12 && worst_naive <= 1e-12;
  item.observed = std::to_string(pairs) + " pairs, max rel diff streaming/batch " + num(worst_stream) +
                  ", log-domain/naive gini " + num(worst_naive);
  item.expected = "both <= 1e-12";
  return item;
}

ReproduceItem axioms(double scale) {
  const int trials = static_cast<int>(scaled(300, scale, 30));
  std::ostringstream failures;
  std::size_t checks = 0;
  std::uint64_t seed = kSeed + 2;
  for (const auto& m : reference_means()) {
    for (const Axiom a : {Axiom::internality, Axiom::symmetry, Axiom::repetition_invariance}) {
      ++checks;
      if (!check_axiom(m, a, trials, seed++).passed) {
        failures << format_mean(m) << " " << to_string(a) << "; ";
      }
    }
  }
  std::mt19937_64 rng(kSeed + 3);
  std::uniform_int_distribution<int> coord(-20, 20);
  std::vector<std::pair<double, double>> pairs{{1, -1}, {0.5, -0.5}, {0.5, 0}, {2, -2}, {0, 0}};
  while (pairs.size() < 25) {
    const double p = coord(rng) / 10.0;
    const double q = coord(rng) / 10.0;
    if (p * q <= 0.0) pairs.emplace_back(p, q);
  }
  for (const auto& [p, q] : pairs) {
    ++checks;
    if (!check_axiom(GiniMean{p, q}, Axiom::monotonicity, trials, seed++).passed) {
      failures << "gini:" << num(p) << "," << num(q) << " monotonicity; ";
    }
  }
  const AxiomReport grid = grid_monotonicity_search(GiniMean{2.0, 1.0}, 10.0, 0.5);
  const bool witness_found = !grid.passed && grid.witness.has_value();
  ReproduceItem item;
  item.passed = failures.str().empty() && witness_found;
  item.observed = std::to_string(checks) + " randomized checks, failures: [" + failures.str() +
                  "]; gini:2,1 grid witness " +
                  (witness_found ? "M(" + num(grid.witness->vector[0]) + "," +
                                       num(grid.witness->vector[1]) + ")=" +
                                       num(grid.witness->lhs) + " > M(" +
                                       num(grid.witness->perturbed[0]) + "," +
                                       num(grid.witness->perturbed[1]) + ")=" +
                                       num(grid.witness->rhs)
                                 : std::string("none"));
  item.expected = "no failures; a monotonicity witness for a pq > 0 Gini mean";
  return item;
}

using ItemFn = std::function<ReproduceItem(double)>;

const std::vector<std::pair<std::string, ItemFn>>& registry() {
  static const std::vector<std::pair<std::string, ItemFn>> items{
      {"power-constants", power_constants},
      {"hardy-bound", hardy_bound},
      {"near-extremal", near_extremal},
      {"gini-limit", gini_limit},
      {"counterexample", counterexample},
      {"d-sequence", d_sequence},
      {"log-growth", log_growth},
      {"classification-grid", classification_grid},
      {"streaming", streaming},
      {"axioms", axioms},
  };
  return items;
}

}  // namespace

const std::vector<std::string>& reproduce_item_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

std::vector<ReproduceItem> reproduce_all(const std::string& only, double n_scale) {
  if (!(n_scale > 0.0 && n_scale <= 1.0)) {
    throw ParameterError("--n-scale must lie in (0, 1]");
  }
  const auto& names = reproduce_item_names();
  if (!only.empty() && std::find(names.begin(), names.end(), only) == names.end()) {
    throw ParameterError("unknown reproduce item '" + only + "'");
  }
  std::vector<ReproduceItem> out;
  for (const auto& [name, fn] : registry()) {
    if (!only.empty() && name != only) continue;
    const auto start = std::chrono::steady_clock::now();
    ReproduceItem item = fn(n_scale);
    item.name = name;
    item.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.push_back(std::move(item));
  }
  return out;
}

}  // namespace hardy::cli
