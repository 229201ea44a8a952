#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace hardy {

struct ExplicitSequence {
  std::vector<double> values;
  /// Where the values were loaded from; echoed by format_sequence.
  std::string source;
};
/// a_n = 1/n.
struct HarmonicSequence {};
/// a_n = c r^(n-1), 0 < r < 1.
struct GeometricSequence {
  double c = 1.0;
  double r = 0.5;
};
/// a_n = c n^(-beta), beta > 1.
struct PowerLawSequence {
  double c = 1.0;
  double beta = 2.0;
};
/// a_n = N^2 / n^2.
struct ScaledSquaresSequence {
  std::size_t n = 1;
};
/// a_n = 1/n for n <= N, delta 2^-(n-N) afterwards.
struct TruncatedHarmonicSequence {
  std::size_t n = 1;
  double delta = 1e-9;
};

/// A positive sequence, generated lazily term by term (indices start at 1).
class SequenceSpec {
 public:
  using Variant = std::variant<ExplicitSequence, HarmonicSequence, GeometricSequence,
                               PowerLawSequence, ScaledSquaresSequence, TruncatedHarmonicSequence>;

  /// Validates parameters; throws ParameterError.
  SequenceSpec(Variant v);  // NOLINT(google-explicit-constructor)

  static SequenceSpec explicit_values(std::vector<double> values, std::string source = "inline");
  static SequenceSpec harmonic() { return SequenceSpec(HarmonicSequence{}); }
  static SequenceSpec geometric(double c, double r) { return SequenceSpec(GeometricSequence{c, r}); }
  static SequenceSpec power_law(double c, double beta) {
    return SequenceSpec(PowerLawSequence{c, beta});
  }
  static SequenceSpec scaled_squares(std::size_t n) { return SequenceSpec(ScaledSquaresSequence{n}); }
  static SequenceSpec truncated_harmonic(std::size_t n, double delta) {
    return SequenceSpec(TruncatedHarmonicSequence{n, delta});
  }

  const Variant& variant() const noexcept { return v_; }

  /// a_n for n >= 1. Throws ExhaustedError past the end of an explicit sequence.
  /// May underflow to 0 for fast-decaying families; use log_term there.
  double term(std::size_t n) const;
  /// ln a_n, exact for the closed-form families.
  double log_term(std::size_t n) const;
  /// Number of terms for explicit sequences.
  std::optional<std::size_t> length() const noexcept;
  /// True when sum a_n < inf.
  bool summable() const noexcept;

 private:
  Variant v_;
};

/// Parses `explicit:@file.csv`, `harmonic`, `geometric:<c>,<r>`,
/// `powerlaw:<c>,<beta>`, `scaledsquares:<N>`, `truncharmonic:<N>,<delta>`.
/// Explicit files hold one positive decimal per line.
SequenceSpec parse_sequence(std::string_view text);

std::string format_sequence(const SequenceSpec& seq);

/// Reads one positive decimal per line (blank lines skipped).
std::vector<double> read_values_file(const std::string& path);

}  // namespace hardy
