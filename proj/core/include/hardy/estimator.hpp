#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hardy/mean.hpp"
#include "hardy/sequence.hpp"

namespace hardy {

enum class SequenceFamily {
  geometric_r,      ///< a_n = r^(n-1), parameter r in (0, 1)
  powerlaw_beta,    ///< a_n = n^(-beta), parameter beta > 1
  truncharmonic_N,  ///< 1/n up to N, then a 2^-k tail starting at 1e-9 / N
};

std::string_view to_string(SequenceFamily f);
/// Accepts the names printed by to_string. Throws ParseError otherwise.
SequenceFamily parse_family(std::string_view name);

/// Member of `family` at parameter `param`, and the number of terms evaluated
/// for it: n_max for geometric and power-law members, 4N for truncated-harmonic
/// members (the slowly decaying operator tail after N is included, and members
/// with different N are cut at the same relative point).
std::pair<SequenceSpec, std::size_t> family_member(SequenceFamily family, double param,
                                                   std::size_t n_max);

struct FamilySearchResult {
  std::string family;
  std::string mean;
  std::vector<double> best_params;
  double best_ratio = 0.0;
  /// Every evaluated (param, ratio), sorted by param.
  std::vector<std::pair<double, double>> ratio_curve;
  std::size_t n_max_used = 0;
};

/// Lower bound on H(mean): the largest partial Hardy ratio found over the
/// family. Evaluates every grid point, then runs one golden-section refinement
/// around the best point down to a bracket of (grid step)/16.
/// Throws ParameterError for an empty grid, n_max < 1000 or non-summable
/// parameters.
FamilySearchResult estimate_hardy_lower_bound(const MeanSpec& mean, SequenceFamily family,
                                              std::span<const double> grid, std::size_t n_max);

struct CounterexampleResult {
  std::size_t n = 0;            ///< N
  std::size_t n_cut = 0;        ///< 100 N
  double partial_sum_n = 0.0;   ///< sum_{n <= N} of prefix means
  double lower_bound = 0.0;     ///< N^2 ln N
  double full_ratio = 0.0;      ///< prefix-mean sum / l1 sum, both up to n_cut
  double bound_6pi2 = 0.0;      ///< (6 / pi^2) ln N
  bool partial_sum_holds = false;  ///< partial_sum_n >= lower_bound
  bool ratio_holds = false;        ///< full_ratio >= bound_6pi2 - 0.1
};

/// Log-linear quasi-arithmetic mean on a_n = N^2 / n^2: the operator sum over
/// the first N terms already exceeds N^2 ln N, so the Hardy ratio grows like
/// ln N. Requires N >= 2.
CounterexampleResult reproduce_counterexample(std::size_t n);

struct GiniLimitResult {
  double prefix_mean = 0.0;
  double closed_form = 0.0;
  double abs_err = 0.0;
};

/// G_{p,q}(1, 1/2, ..., 2^(1-n)) against its limit
/// ((1 - 2^-q) / (1 - 2^-p))^(1/(p-q)). Requires p, q in (0, 1), p != q.
GiniLimitResult reproduce_gini_limit(double p, double q, std::size_t n);

}  // namespace hardy
