#pragma once

#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hardy/generator.hpp"

namespace hardy {

/// Power mean P_alpha: ((sum a_i^alpha) / n)^(1/alpha); P_0 is the geometric mean.
struct PowerMean {
  double alpha = 1.0;
};

/// Gini mean G_{p,q}: (sum a_i^p / sum a_i^q)^(1/(p-q)) for p != q and
/// exp(sum a_i^p ln a_i / sum a_i^p) for p == q.
struct GiniMean {
  double p = 1.0;
  double q = 0.0;
};

/// Quasi-arithmetic mean f^{-1}((f(a_1) + ... + f(a_n)) / n).
struct QuasiArithmeticMean {
  Generator generator;
};

using MeanSpec = std::variant<PowerMean, GiniMean, QuasiArithmeticMean>;

/// Below this parameter gap a Gini mean is evaluated through its p == q branch
/// at the midpoint.
inline constexpr double kGiniDegenerateGap = 1e-10;

/// Open interval of admissible entries.
Interval domain_of(const MeanSpec& mean);

/// M(a_1, ..., a_n). Throws DomainError for entries outside the domain and
/// ParameterError for an empty vector. The result always lies in [min a, max a].
double eval(const MeanSpec& mean, std::span<const double> a);

/// f^{-1}((w1 f(a1) + w2 f(a2)) / (w1 + w2)), clamped between a1 and a2.
double eval_weighted_qa2(const Generator& gen, double a1, double a2, double w1, double w2);

/// Parses `power:<alpha>`, `gini:<p>,<q>`, `qa:power:<p>`, `qa:log` or
/// `qa:paper-example`. Throws ParseError naming the offending token.
MeanSpec parse_mean(std::string_view text);

/// Inverse of parse_mean for grammar-expressible means. Composed or custom
/// generators render as `qa:<label>`, which does not parse back.
std::string format_mean(const MeanSpec& mean);

/// A spread of means used by the axiom and reproduction suites: several power
/// means, monotone and non-monotone Gini means, and the catalog generators.
std::vector<MeanSpec> reference_means();

}  // namespace hardy
