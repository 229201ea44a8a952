#include "hardy/generator.hpp"

#include <cmath>
#include <utility>

#include "hardy/errors.hpp"
#include "hardy/format.hpp"

namespace hardy {

struct Generator::Impl {
  std::string label;
  Interval domain;
  Monotonicity direction = Monotonicity::increasing;
  GeneratorKind kind = GeneratorKind::custom;
  std::optional<double> exponent;
  Function forward;
  Function inverse;
  Function forward_log;
  Function log_inverse;
};

namespace {

constexpr double kBisectionTolerance = 1e-13;
constexpr int kMaxBisectionSteps = 2000;

[[noreturn]] void throw_outside(const std::string& label, double x) {
  throw DomainError("value " + format_shortest(x) + " is outside the domain of generator '" +
                    label + "'");
}

}  // namespace

Generator::Generator(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

Generator Generator::power(double p) {
  if (!std::isfinite(p)) throw ParameterError("power generator exponent must be finite");
  auto impl = std::make_shared<Impl>();
  impl->kind = GeneratorKind::power;
  impl->exponent = p;
  impl->domain = Interval{};
  if (p == 0.0) {
    impl->label = "log";
    impl->forward = [](double x) { return std::log(x); };
    impl->inverse = [](double y) { return std::exp(y); };
    impl->forward_log = [](double lx) { return lx; };
    impl->log_inverse = [](double y) { return y; };
  } else {
    impl->label = "power:" + format_shortest(p);
    impl->direction = p > 0 ? Monotonicity::increasing : Monotonicity::decreasing;
    impl->forward = [p](double x) { return std::pow(x, p); };
    impl->inverse = [p](double y) { return std::pow(y, 1.0 / p); };
    impl->forward_log = [p](double lx) { return std::exp(p * lx); };
    impl->log_inverse = [p](double y) { return std::log(y) / p; };
  }
  return Generator(std::move(impl));
}

Generator Generator::logarithm() { return power(0.0); }

Generator Generator::log_linear() {
  auto impl = std::make_shared<Impl>();
  impl->label = "paper-example";
  impl->kind = GeneratorKind::log_linear;
  impl->domain = Interval{};
  impl->forward = [](double x) { return x <= 1.0 ? std::log(x) : x - 1.0; };
  impl->inverse = [](double y) { return y <= 0.0 ? std::exp(y) : y + 1.0; };
  impl->forward_log = [](double lx) { return lx <= 0.0 ? lx : std::expm1(lx); };
  impl->log_inverse = [](double y) { return y <= 0.0 ? y : std::log1p(y); };
  return Generator(std::move(impl));
}

Generator Generator::affine(const Generator& base, double scale, double shift) {
  if (!(std::isfinite(scale) && scale != 0.0 && std::isfinite(shift))) {
    throw ParameterError("affine generator needs a finite nonzero scale and finite shift");
  }
  auto impl = std::make_shared<Impl>();
  impl->label = "affine(" + format_shortest(scale) + "," + format_shortest(shift) + "," +
                base.label() + ")";
  impl->kind = GeneratorKind::composed;
  impl->domain = base.domain();
  const bool flips = scale < 0;
  impl->direction = (base.direction() == Monotonicity::increasing) != flips
                        ? Monotonicity::increasing
                        : Monotonicity::decreasing;
  impl->forward = [base, scale, shift](double x) { return scale * base.forward(x) + shift; };
  impl->inverse = [base, scale, shift](double y) { return base.inverse((y - shift) / scale); };
  impl->forward_log = [base, scale, shift](double lx) {
    return scale * base.forward_log(lx) + shift;
  };
  impl->log_inverse = [base, scale, shift](double y) {
    return base.log_inverse((y - shift) / scale);
  };
  return Generator(std::move(impl));
}

Generator Generator::log_of(const Generator& base) {
  // Spot check positivity on a spread of domain points.
  const Interval d = base.domain();
  const double lo = d.lo > 0 ? d.lo : 1e-300;
  const double hi = std::isfinite(d.hi) ? d.hi : 1e300;
  for (int i = 1; i < 64; ++i) {
    const double t = static_cast<double>(i) / 64.0;
    const double x = std::exp(std::log(lo) + t * (std::log(hi) - std::log(lo)));
    if (!d.contains(x)) continue;
    if (!(base.forward(x) > 0.0)) {
      throw ParameterError("log_of needs a generator that is positive on its domain; '" +
                           base.label() + "' is not positive at " + format_shortest(x));
    }
  }
  auto impl = std::make_shared<Impl>();
  impl->label = "log(" + base.label() + ")";
  impl->kind = GeneratorKind::composed;
  impl->domain = d;
  impl->direction = base.direction();
  impl->forward = [base](double x) { return std::log(base.forward(x)); };
  impl->inverse = [base](double y) { return base.inverse(std::exp(y)); };
  impl->forward_log = [base](double lx) { return std::log(base.forward_log(lx)); };
  impl->log_inverse = [base](double y) { return base.log_inverse(std::exp(y)); };
  return Generator(std::move(impl));
}

Generator Generator::from_function(std::string label, Interval domain, Function forward,
                                   Interval bracket) {
  if (!(domain.lo >= 0.0 && domain.lo < domain.hi)) {
    throw ParameterError("generator domain must be an interval (lo, hi) with 0 <= lo < hi");
  }
  if (!(bracket.lo < bracket.hi && domain.contains(bracket.lo) && domain.contains(bracket.hi))) {
    throw ParameterError("inversion bracket must be a nonempty closed sub-interval of the domain");
  }
  if (!forward) throw ParameterError("generator forward map is empty");
  const double f_lo = forward(bracket.lo);
  const double f_hi = forward(bracket.hi);
  if (!(std::isfinite(f_lo) && std::isfinite(f_hi)) || f_lo == f_hi) {
    throw ParameterError("generator '" + label + "' is not strictly monotone on its bracket");
  }
  auto impl = std::make_shared<Impl>();
  impl->label = std::move(label);
  impl->kind = GeneratorKind::custom;
  impl->domain = domain;
  impl->direction = f_lo < f_hi ? Monotonicity::increasing : Monotonicity::decreasing;
  impl->forward = forward;
  const bool increasing = impl->direction == Monotonicity::increasing;
  const std::string name = impl->label;
  impl->inverse = [forward, bracket, increasing, f_lo, f_hi, name](double y) {
    const double y_min = increasing ? f_lo : f_hi;
    const double y_max = increasing ? f_hi : f_lo;
    if (!(y >= y_min && y <= y_max)) {
      throw DomainError("value " + format_shortest(y) + " is outside the range of generator '" +
                        name + "' on its inversion bracket");
    }
    double lo = bracket.lo;
    double hi = bracket.hi;
    for (int step = 0; step < kMaxBisectionSteps && hi - lo > kBisectionTolerance; ++step) {
      const double mid = lo + 0.5 * (hi - lo);
      if (mid <= lo || mid >= hi) break;
      const bool below = increasing ? forward(mid) < y : forward(mid) > y;
      (below ? lo : hi) = mid;
    }
    return lo + 0.5 * (hi - lo);
  };
  impl->forward_log = [forward](double lx) { return forward(std::exp(lx)); };
  Function inverse = impl->inverse;
  impl->log_inverse = [inverse](double y) { return std::log(inverse(y)); };
  return Generator(std::move(impl));
}

const std::string& Generator::label() const noexcept { return impl_->label; }
Interval Generator::domain() const noexcept { return impl_->domain; }
Monotonicity Generator::direction() const noexcept { return impl_->direction; }
GeneratorKind Generator::kind() const noexcept { return impl_->kind; }
std::optional<double> Generator::power_exponent() const noexcept { return impl_->exponent; }

bool Generator::contains_log(double log_x) const noexcept {
  const Interval d = impl_->domain;
  if (!(std::isfinite(log_x))) return false;
  const double log_lo = d.lo > 0 ? std::log(d.lo) : -std::numeric_limits<double>::infinity();
  const double log_hi = std::log(d.hi);
  if (log_x <= log_lo || log_x >= log_hi) {
    // log rounding can misplace points within an ulp of an endpoint.
    return d.contains(std::exp(log_x));
  }
  return true;
}

double Generator::forward(double x) const {
  if (!contains(x)) throw_outside(impl_->label, x);
  return impl_->forward(x);
}

double Generator::inverse(double y) const { return impl_->inverse(y); }

double Generator::forward_log(double log_x) const {
  if (!contains_log(log_x)) throw_outside(impl_->label, std::exp(log_x));
  return impl_->forward_log(log_x);
}

double Generator::log_inverse(double y) const { return impl_->log_inverse(y); }

}  // namespace hardy
