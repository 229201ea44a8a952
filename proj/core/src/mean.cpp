#include "hardy/mean.hpp"

#include <algorithm>
#include <cmath>

#include "hardy/accumulator.hpp"
#include "hardy/errors.hpp"
#include "hardy/format.hpp"
#include "overloaded.hpp"

namespace hardy {

using detail::overloaded;

namespace {

double parse_finite(const std::string& token, const std::string& what) {
  double value = 0.0;
  if (!parse_real(token, value) || !std::isfinite(value)) {
    throw ParseError("expected a finite number for " + what, token);
  }
  return value;
}

}  // namespace

Interval domain_of(const MeanSpec& mean) {
  if (const auto* qa = std::get_if<QuasiArithmeticMean>(&mean)) return qa->generator.domain();
  return Interval{};
}

double eval(const MeanSpec& mean, std::span<const double> a) {
  if (a.empty()) throw ParameterError("mean of an empty vector is undefined");
  MeanAccumulator acc(mean);
  for (const double x : a) acc.push(x);
  return acc.value();
}

double eval_weighted_qa2(const Generator& gen, double a1, double a2, double w1, double w2) {
  if (!(w1 > 0.0 && w2 > 0.0 && std::isfinite(w1) && std::isfinite(w2))) {
    throw ParameterError("weights must be finite and strictly positive");
  }
  const double f1 = gen.forward(a1);
  const double f2 = gen.forward(a2);
  const double raw = gen.inverse((w1 * f1 + w2 * f2) / (w1 + w2));
  return std::clamp(raw, std::min(a1, a2), std::max(a1, a2));
}

MeanSpec parse_mean(std::string_view text) {
  const std::string s(text);
  const auto colon = s.find(':');
  const std::string head = s.substr(0, colon);
  const std::string rest = colon == std::string::npos ? std::string() : s.substr(colon + 1);

  if (head == "power") {
    if (colon == std::string::npos) throw ParseError("power mean needs an exponent", s);
    return PowerMean{parse_finite(rest, "power exponent")};
  }
  if (head == "gini") {
    const auto comma = rest.find(',');
    if (colon == std::string::npos || comma == std::string::npos) {
      throw ParseError("gini mean needs two parameters 'gini:<p>,<q>'", s);
    }
    return GiniMean{parse_finite(rest.substr(0, comma), "gini p"),
                    parse_finite(rest.substr(comma + 1), "gini q")};
  }
  if (head == "qa") {
    if (rest == "log") return QuasiArithmeticMean{Generator::logarithm()};
    if (rest == "paper-example") return QuasiArithmeticMean{Generator::log_linear()};
    if (rest.rfind("power:", 0) == 0) {
      return QuasiArithmeticMean{Generator::power(parse_finite(rest.substr(6), "generator exponent"))};
    }
    throw ParseError("unknown generator; expected power:<p>, log or paper-example", rest);
  }
  throw ParseError("unknown mean family; expected power, gini or qa", head);
}

std::string format_mean(const MeanSpec& mean) {
  return std::visit(overloaded{
                        [](const PowerMean& m) { return "power:" + format_shortest(m.alpha); },
                        [](const GiniMean& m) {
                          return "gini:" + format_shortest(m.p) + "," + format_shortest(m.q);
                        },
                        [](const QuasiArithmeticMean& m) { return "qa:" + m.generator.label(); },
                    },
                    mean);
}

std::vector<MeanSpec> reference_means() {
  std::vector<MeanSpec> means;
  for (const double alpha : {-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0, 3.0}) {
    means.emplace_back(PowerMean{alpha});
  }
  const std::pair<double, double> gini[] = {{1.0, -1.0}, {0.5, -0.5}, {0.5, 0.0},  {-1.0, -1.0},
                                            {0.3, 0.7},  {1.0, 1.0},  {2.0, 1.0},  {-2.0, 1.5}};
  for (const auto& [p, q] : gini) means.emplace_back(GiniMean{p, q});
  means.emplace_back(QuasiArithmeticMean{Generator::power(0.5)});
  means.emplace_back(QuasiArithmeticMean{Generator::power(-1.0)});
  means.emplace_back(QuasiArithmeticMean{Generator::logarithm()});
  means.emplace_back(QuasiArithmeticMean{Generator::log_linear()});
  return means;
}

}  // namespace hardy
