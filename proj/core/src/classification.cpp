#include "hardy/classification.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "hardy/errors.hpp"
#include "overloaded.hpp"

namespace hardy {

using detail::overloaded;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) throw ParameterError(std::string(what) + " must be finite");
}

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::unknown: return "unknown";
  }
  return "unknown";
}

ClassificationResult classify_power(double alpha) {
  require_finite(alpha, "power exponent");
  ClassificationResult r;
  r.monotone = Verdict::yes;
  if (alpha >= 1.0) {
    r.hardy = Verdict::no;
    r.weak_hardy = Verdict::no;
    r.hardy_constant = kInf;
    r.rationale =
        "Power means with alpha >= 1 have infinite Hardy constant (Hardy-Landau-Knopp); "
        "G_{alpha,0} = P_alpha with max(alpha,0) >= 1 is not weak-Hardy since weak-Hardy and "
        "Hardy coincide on Gini means.";
    return r;
  }
  r.hardy = Verdict::yes;
  r.weak_hardy = Verdict::yes;
  if (alpha == 0.0) {
    r.hardy_constant = std::numbers::e;
    r.rationale = "Carleman's inequality: H(P_0) = e.";
  } else {
    // pow loses digits to 1 - alpha near zero; exact values such as 4 and 2 come from pow.
    r.hardy_constant = std::fabs(alpha) < 1e-3 ? std::exp(-std::log1p(-alpha) / alpha)
                                                : std::pow(1.0 - alpha, -1.0 / alpha);
    r.rationale = "Hardy-Landau-Knopp: H(P_alpha) = (1-alpha)^(-1/alpha) for alpha < 1.";
  }
  return r;
}

ClassificationResult classify_gini(double p, double q) {
  require_finite(p, "gini p");
  require_finite(q, "gini q");
  const bool hardy = std::min(p, q) <= 0.0 && std::max(p, q) < 1.0;
  ClassificationResult r;
  r.hardy = hardy ? Verdict::yes : Verdict::no;
  r.weak_hardy = r.hardy;
  r.monotone = p * q <= 0.0 ? Verdict::yes : Verdict::no;
  std::string why = hardy ? "G_{p,q} is Hardy iff min(p,q) <= 0 and max(p,q) < 1 (Pales-Persson; "
                            "Pasteczka); weak-Hardy and Hardy coincide on Gini means."
                          : "min(p,q) <= 0 and max(p,q) < 1 fails, so G_{p,q} is not Hardy; "
                            "weak-Hardy and Hardy coincide on Gini means.";
  why += p * q <= 0.0 ? " Monotone since pq <= 0 (Losonczi)." : " Not monotone since pq > 0 (Losonczi).";
  if (!hardy) {
    r.hardy_constant = kInf;
  } else if (q == 0.0 || p == 0.0) {
    r.hardy_constant = classify_power(q == 0.0 ? p : q).hardy_constant;
    why += " With one parameter zero G_{p,q} is a power mean, whose constant is known.";
  } else {
    why += " No closed-form Hardy constant is known for this pair.";
  }
  r.rationale = std::move(why);
  return r;
}

ClassificationResult classify_qa(const Generator& gen) {
  if (const auto p = gen.power_exponent()) {
    ClassificationResult r = classify_power(*p);
    r.rationale = "Generator pi_p yields the power mean P_p. " + r.rationale;
    return r;
  }
  if (gen.kind() == GeneratorKind::log_linear) {
    ClassificationResult r;
    r.hardy = Verdict::no;
    r.weak_hardy = Verdict::yes;
    r.hardy_constant = kInf;
    r.monotone = Verdict::yes;
    r.rationale =
        "Restricted to (0,1] the mean is geometric, hence Hardy near zero, which makes it "
        "weak-Hardy; on [1,inf) it is arithmetic and a_n = N^2/n^2 forces "
        "H >= (6/pi^2) ln N for every N, so it is not Hardy.";
    return r;
  }
  ClassificationResult r;
  r.rationale =
      "No closed-form result covers generator '" + gen.label() +
      "'; gather numerical evidence with the probes (Mulholland domination search, "
      "theorem-main probe).";
  return r;
}

ClassificationResult classify(const MeanSpec& mean) {
  return std::visit(overloaded{
                        [](const PowerMean& m) { return classify_power(m.alpha); },
                        [](const GiniMean& m) { return classify_gini(m.p, m.q); },
                        [](const QuasiArithmeticMean& m) { return classify_qa(m.generator); },
                    },
                    mean);
}

}  // namespace hardy
