#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "hardy/generator.hpp"
#include "hardy/mean.hpp"

namespace hardy {

enum class Verdict { yes, no, unknown };

std::string_view to_string(Verdict v);

/// Closed-form Hardy status of a mean.
///
/// `hardy_constant` is empty when unknown and +infinity for non-Hardy means.
/// Invariants: hardy == yes implies weak_hardy == yes; a finite constant is
/// reported only when hardy == yes.
struct ClassificationResult {
  Verdict hardy = Verdict::unknown;
  Verdict weak_hardy = Verdict::unknown;
  std::optional<double> hardy_constant;
  Verdict monotone = Verdict::unknown;
  std::string rationale;
};

/// H(P_alpha) = (1 - alpha)^(-1/alpha) for alpha < 1, alpha != 0; e for
/// alpha = 0; +inf (and not weak-Hardy) for alpha >= 1.
ClassificationResult classify_power(double alpha);

/// Hardy iff min(p, q) <= 0 and max(p, q) < 1, and weak-Hardy exactly when
/// Hardy. Monotone iff p q <= 0. The constant is known only when one
/// parameter is zero (the power-mean case).
ClassificationResult classify_gini(double p, double q);

/// Definitive only for catalog generators: power generators reduce to the
/// power mean, the log-linear generator is weak-Hardy but not Hardy. Everything
/// else is reported as unknown.
ClassificationResult classify_qa(const Generator& gen);

ClassificationResult classify(const MeanSpec& mean);

}  // namespace hardy
