#pragma once

#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <string>

namespace hardy {

/// Open interval (lo, hi). `hi` may be +infinity.
struct Interval {
  double lo = 0.0;
  double hi = std::numeric_limits<double>::infinity();

  bool contains(double x) const noexcept { return x > lo && x < hi; }
};

enum class Monotonicity { increasing, decreasing };

enum class GeneratorKind {
  power,       ///< x^p for p != 0, ln x for p == 0
  log_linear,  ///< ln x on (0, 1], x - 1 above
  composed,    ///< affine or logarithmic composition of another generator
  custom,      ///< caller-supplied forward map, inverted by bisection
};

/// A continuous strictly monotone function f on an interval, together with its
/// inverse. Defines the quasi-arithmetic mean f^{-1}(mean of f(a_i)).
///
/// Generators are immutable and cheap to copy; copies share state.
///
/// Besides `forward`/`inverse` every generator also evaluates f from ln x
/// (`forward_log`) and ln f^{-1}(y) (`log_inverse`). The catalog generators do
/// this in closed form so that terms far below the smallest normal double can
/// still be averaged.
class Generator {
 public:
  using Function = std::function<double(double)>;

  /// pi_p: x^p if p != 0, ln x if p == 0. Domain (0, inf).
  static Generator power(double p);
  /// Same as power(0).
  static Generator logarithm();
  /// ln x on (0, 1] and x - 1 on (1, inf). Geometric near zero, arithmetic
  /// above one.
  static Generator log_linear();

  /// scale * base(x) + shift. `scale` must be nonzero and finite.
  static Generator affine(const Generator& base, double scale, double shift);
  /// ln(base(x)). `base` must be positive on its domain; this is spot-checked.
  static Generator log_of(const Generator& base);
  /// Arbitrary continuous strictly monotone `forward` on `domain`. The inverse
  /// is found by bisection on `bracket` (a closed sub-interval of the domain)
  /// to an absolute tolerance of 1e-13.
  static Generator from_function(std::string label, Interval domain, Function forward,
                                 Interval bracket);

  const std::string& label() const noexcept;
  Interval domain() const noexcept;
  Monotonicity direction() const noexcept;
  GeneratorKind kind() const noexcept;
  /// Exponent for GeneratorKind::power, empty otherwise.
  std::optional<double> power_exponent() const noexcept;

  bool contains(double x) const noexcept { return domain().contains(x); }
  /// True when exp(log_x) lies in the domain.
  bool contains_log(double log_x) const noexcept;

  /// Throws DomainError outside the domain.
  double forward(double x) const;
  double inverse(double y) const;
  /// f(exp(log_x)). Throws DomainError outside the domain.
  double forward_log(double log_x) const;
  /// ln f^{-1}(y).
  double log_inverse(double y) const;

 private:
  struct Impl;
  explicit Generator(std::shared_ptr<const Impl> impl);

  std::shared_ptr<const Impl> impl_;
};

}  // namespace hardy
