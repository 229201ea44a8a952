#include "hardy/axioms.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "hardy/errors.hpp"

namespace hardy {

namespace {

constexpr double kRelativeTolerance = 1e-12;
constexpr double kInternalitySlack = 1e-14;
constexpr int kRepetitions[] = {2, 3, 5};

bool close_relative(double x, double y) {
  return std::fabs(x - y) <= kRelativeTolerance * std::max(std::fabs(x), std::fabs(y));
}

class VectorSampler {
 public:
  VectorSampler(std::uint64_t seed, SamplingRange range, Interval domain) : rng_(seed) {
    // Keep samples strictly inside an open domain.
    const double lo = std::max(range.lo, domain.lo > 0 ? domain.lo * (1 + 1e-9) : range.lo);
    const double hi = std::min(range.hi, std::isfinite(domain.hi) ? domain.hi * (1 - 1e-9) : range.hi);
    if (!(lo > 0.0 && lo < hi)) {
      throw ParameterError("sampling range does not intersect the mean's domain");
    }
    log_lo_ = std::log(lo);
    log_hi_ = std::log(hi);
  }

  std::vector<double> vector() {
    std::uniform_int_distribution<int> length(1, 16);
    std::vector<double> v(static_cast<std::size_t>(length(rng_)));
    for (double& x : v) x = entry();
    return v;
  }

  double entry() {
    std::uniform_real_distribution<double> u(log_lo_, log_hi_);
    return std::exp(u(rng_));
  }

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  std::size_t index(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
  double log_lo_ = 0.0;
  double log_hi_ = 0.0;
};

bool inside(const Interval& d, const std::vector<double>& v) {
  return std::all_of(v.begin(), v.end(), [&](double x) { return d.contains(x); });
}

// One trial; returns a witness on failure.
std::optional<AxiomWitness> run_trial(const MeanSpec& mean, Axiom axiom, int trial,
                                      VectorSampler& sampler, const Interval& domain) {
  const std::vector<double> a = sampler.vector();
  const double m = eval(mean, a);
  switch (axiom) {
    case Axiom::internality: {
      const auto [lo, hi] = std::minmax_element(a.begin(), a.end());
      if (m < *lo - kInternalitySlack || m > *hi + kInternalitySlack) {
        return AxiomWitness{a, a, m, m < *lo ? *lo : *hi, "min(a) <= M(a) <= max(a)"};
      }
      return std::nullopt;
    }
    case Axiom::symmetry: {
      std::vector<double> b = a;
      std::shuffle(b.begin(), b.end(), sampler.engine());
      const double mb = eval(mean, b);
      if (!close_relative(m, mb)) return AxiomWitness{a, b, m, mb, "M(a) == M(shuffled a)"};
      return std::nullopt;
    }
    case Axiom::monotonicity: {
      std::vector<double> b = a;
      const std::size_t i = sampler.index(b.size());
      b[i] *= std::exp(sampler.uniform(std::log(1e-6), 0.0)) + 1.0;
      if (!inside(domain, b)) return std::nullopt;
      const double mb = eval(mean, b);
      if (mb < m * (1.0 - kRelativeTolerance)) {
        return AxiomWitness{a, b, m, mb, "M(a) <= M(b) when a <= b coordinatewise"};
      }
      return std::nullopt;
    }
    case Axiom::homogeneity: {
      const double lambda = std::exp(sampler.uniform(std::log(0.1), std::log(10.0)));
      std::vector<double> b = a;
      for (double& x : b) x *= lambda;
      if (!inside(domain, b)) return std::nullopt;
      const double mb = eval(mean, b);
      if (!close_relative(mb, lambda * m)) {
        return AxiomWitness{a, b, mb, lambda * m, "M(lambda a) == lambda M(a)"};
      }
      return std::nullopt;
    }
    case Axiom::repetition_invariance: {
      const int reps = kRepetitions[trial % 3];
      std::vector<double> b;
      b.reserve(a.size() * static_cast<std::size_t>(reps));
      for (const double x : a) b.insert(b.end(), static_cast<std::size_t>(reps), x);
      const double mb = eval(mean, b);
      if (!close_relative(m, mb)) {
        return AxiomWitness{a, b, mb, m,
                            "M(each entry repeated " + std::to_string(reps) + " times) == M(a)"};
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace

std::string_view to_string(Axiom axiom) {
  switch (axiom) {
    case Axiom::internality: return "internality";
    case Axiom::symmetry: return "symmetry";
    case Axiom::monotonicity: return "monotonicity";
    case Axiom::homogeneity: return "homogeneity";
    case Axiom::repetition_invariance: return "repetition_invariance";
  }
  return "unknown";
}

Axiom parse_axiom(std::string_view name) {
  for (const Axiom a : {Axiom::internality, Axiom::symmetry, Axiom::monotonicity,
                        Axiom::homogeneity, Axiom::repetition_invariance}) {
    if (to_string(a) == name) return a;
  }
  throw ParseError("unknown axiom", std::string(name));
}

AxiomReport check_axiom(const MeanSpec& mean, Axiom axiom, int trials, std::uint64_t seed,
                        SamplingRange range) {
  if (trials < 1) throw ParameterError("trials must be at least 1");
  const Interval domain = domain_of(mean);
  VectorSampler sampler(seed, range, domain);
  AxiomReport report;
  report.axiom = axiom;
  for (int t = 0; t < trials; ++t) {
    report.trials = t + 1;
    if (auto witness = run_trial(mean, axiom, t, sampler, domain)) {
      report.passed = false;
      report.witness = std::move(witness);
      return report;
    }
  }
  return report;
}

AxiomReport grid_monotonicity_search(const MeanSpec& mean, double hi, double step) {
  if (!(step > 0.0 && hi > step)) throw ParameterError("grid needs 0 < step < hi");
  AxiomReport report;
  report.axiom = Axiom::monotonicity;
  const auto points = static_cast<int>(std::floor(hi / step + 1e-9));
  for (int i = 1; i < points; ++i) {
    const double x = i * step;
    const double x_up = (i + 1) * step;
    for (int j = 1; j <= points; ++j) {
      const double y = j * step;
      ++report.trials;
      const std::vector<double> a{x, y};
      const std::vector<double> b{x_up, y};
      const double ma = eval(mean, a);
      const double mb = eval(mean, b);
      if (mb < ma * (1.0 - kRelativeTolerance)) {
        report.passed = false;
        report.witness = AxiomWitness{a, b, ma, mb, "M(a) <= M(b) when a <= b coordinatewise"};
        return report;
      }
    }
  }
  return report;
}

}  // namespace hardy
