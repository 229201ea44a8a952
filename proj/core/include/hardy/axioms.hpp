#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hardy/mean.hpp"

namespace hardy {

enum class Axiom { internality, symmetry, monotonicity, homogeneity, repetition_invariance };

std::string_view to_string(Axiom axiom);
/// Accepts the names printed by to_string. Throws ParseError otherwise.
Axiom parse_axiom(std::string_view name);

/// A concrete violation: `lhs` should have compared to `rhs` as described by
/// `comparison`, with `vector` the base input and `perturbed` the modified one.
struct AxiomWitness {
  std::vector<double> vector;
  std::vector<double> perturbed;
  double lhs = 0.0;
  double rhs = 0.0;
  std::string comparison;
};

struct AxiomReport {
  Axiom axiom = Axiom::internality;
  bool passed = true;
  int trials = 0;
  std::optional<AxiomWitness> witness;
};

/// Entries are drawn log-uniformly from this range (clipped to the mean's domain).
struct SamplingRange {
  double lo = 1e-3;
  double hi = 1e3;
};

/// Randomized check of one mean axiom; deterministic in `seed`.
///
/// Vectors have 1 to 16 entries. Monotonicity raises one coordinate by a
/// random factor, homogeneity scales by lambda in [0.1, 10], repetition
/// invariance cycles m through 2, 3, 5. Symmetry, homogeneity and repetition
/// compare at 1e-12 relative tolerance; internality allows 1e-14 absolute
/// slack; monotonicity accepts decreases below 1e-12 relative.
/// Stops at the first failing trial and returns its witness.
AxiomReport check_axiom(const MeanSpec& mean, Axiom axiom, int trials, std::uint64_t seed,
                        SamplingRange range = {});

/// Exhaustive monotonicity search over two-entry vectors (x, y) with x, y on
/// the grid step, 2*step, ..., hi. Reports the first pair where raising x by
/// one step lowers the mean by more than 1e-12 relative.
AxiomReport grid_monotonicity_search(const MeanSpec& mean, double hi, double step);

}  // namespace hardy
