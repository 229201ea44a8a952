#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hardy/axioms.hpp"
#include "hardy/generator.hpp"
#include "hardy/mean.hpp"
#include "hardy/sequence.hpp"

namespace hardy {

// Evidence probes for the necessary conditions of the weak-Hardy property.
// Every probe gathers finite-n evidence and a verdict; none of them proves a
// statement about infinite tails.

/// min over m <= n of b_n / b_m (1 iff b is nondecreasing). O(length).
/// Throws DomainError for non-positive entries and ParameterError when empty.
double nearly_increasing_epsilon(std::span<const double> b);

/// Same quantity from ln b_n, for ratio sequences that overflow as doubles.
double nearly_increasing_epsilon_log(std::span<const double> log_b);

/// Growth of a sequence between n_max/2 and n_max.
struct DivergenceEvidence {
  double at_half = 0.0;
  double at_n_max = 0.0;
  double growth = 0.0;     ///< at_n_max / at_half
  double threshold = 0.0;  ///< growth needed to count as diverging
  bool diverging = false;
};

/// Partial sums of a_n^(1+s) M_n^(-s) = a_n b_n^(-s).
struct SeriesEvidence {
  double s = 0.0;
  double partial_sum = 0.0;
  /// Log-log slope of block increments of the partial sums over the last
  /// decade; -inf when the increments vanish.
  double tail_slope = 0.0;
  bool finite = false;
};

/// ln v_n ~ ln C + D ln ln n.
struct GrowthFit {
  double c = 0.0;
  double d = 0.0;
  double residual = 0.0;
  std::size_t window_lo = 0;
  std::size_t window_hi = 0;
  std::size_t points = 0;
};

enum class ProbeVerdict { consistent_with_not_weak_hardy, inconclusive };

std::string_view to_string(ProbeVerdict v);

struct ProbeReport {
  std::string probe_name;
  std::string mean;
  std::string sequence;
  std::size_t n_max = 0;
  /// (n, b_n) on a geometric grid; b_n = M(a_1..a_n) / a_n.
  std::vector<std::pair<std::size_t, double>> ratio_sequence_sample;
  double epsilon_hat = 1.0;
  DivergenceEvidence series_divergence;  ///< condition (1): sum a_n
  DivergenceEvidence ratio_divergence;   ///< condition (2): b_n
  std::vector<SeriesEvidence> condition3;
  std::optional<GrowthFit> fit;
  ProbeVerdict verdict = ProbeVerdict::inconclusive;
  std::string notes;
  /// ln b_n for n = 1..n_max (not serialized to JSON; used by --dump-csv).
  std::vector<double> log_b;
};

/// Evidence for the three hypotheses of the non-weak-Hardy criterion:
/// (1) sum a_n diverges, (2) b_n = a_n^{-1} M(a_1..a_n) is nearly increasing
/// and divergent, (3) sum a_n^(1+s) M_n^(-s) is finite for some s in `s_grid`.
///
/// Thresholds: sum a_n diverges when S(n_max)/S(n_max/2) >= 1 + 1/(2 ln n_max);
/// b_n diverges when b(n_max)/b(n_max/2) >= 1 + ln 2/(4 ln n_max), i.e. at
/// least (ln n)^(1/4) growth; b_n counts as nearly increasing when the
/// empirical epsilon is >= 1/2; a series counts as finite when its tail slope
/// is <= -0.1. The verdict is `consistent_with_not_weak_hardy` only when all
/// three hold. The mean is assumed homogeneous and monotone; this is not checked.
///
/// Throws ParameterError when s_grid is empty or has non-positive entries, or
/// n_max < 16.
ProbeReport theorem_main_probe(const MeanSpec& mean, const SequenceSpec& seq,
                               std::span<const double> s_grid, std::size_t n_max);

/// Fits v_n = n M(1, 1/2, ..., 1/n) against C (ln n)^D on 64 geometric points of
/// [max(100, n_max/100), n_max]. Requires n_max >= 100.
GrowthFit log_growth_fit(const MeanSpec& mean, std::size_t n_max);

struct DSequenceResult {
  std::vector<double> d;  ///< d_n = M(n/1, n/2, ..., n/n), n = 1..n_max
  double max_violation = 0.0;  ///< max over m <= n of d_m / d_n
  bool passed = false;         ///< max_violation <= 2 + 1e-9
};

DSequenceResult d_sequence_check(const MeanSpec& mean, std::size_t n_max);

struct MulhollandCandidate {
  double alpha = 0.0;
  double empirical_c = 0.0;  ///< max sampled QA_f(a) / P_alpha(a)
  std::vector<double> witness;  ///< vector attaining empirical_c
};

struct MulhollandResult {
  double best_alpha = 0.0;
  double best_c = 0.0;
  std::vector<MulhollandCandidate> candidates;  ///< one per alpha, in grid order
};

/// Empirical domination constant of QA_f by P_alpha over random vectors of
/// length 1-64 with log-uniform entries in `range`. Each alpha sees the same
/// vectors. Throws ParameterError for alpha >= 1, an empty grid or trials < 1.
MulhollandResult mulholland_search(const Generator& gen, std::span<const double> alpha_grid,
                                   int trials, std::uint64_t seed, SamplingRange range = {});

}  // namespace hardy
