#include "hardy/report.hpp"

#include <cmath>
#include <ostream>

#include "hardy/errors.hpp"
#include "hardy/format.hpp"

namespace hardy {

namespace {

Json vector_json(const std::vector<double>& v) {
  Json out = Json::array();
  for (const double x : v) out.push_back(json_real(x));
  return out;
}

Json divergence_json(const DivergenceEvidence& d) {
  Json j;
  j["at_half"] = json_real(d.at_half);
  j["at_n_max"] = json_real(d.at_n_max);
  j["growth"] = json_real(d.growth);
  j["threshold"] = json_real(d.threshold);
  j["diverging"] = d.diverging;
  return j;
}

}  // namespace

Json json_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "+inf" : "-inf";
  return x;
}

Json to_json(const MeanSpec& mean, const ClassificationResult& r) {
  Json j;
  j["mean"] = format_mean(mean);
  j["hardy"] = to_string(r.hardy);
  j["weak_hardy"] = to_string(r.weak_hardy);
  j["hardy_constant"] = r.hardy_constant ? json_real(*r.hardy_constant) : Json("unknown");
  j["monotone"] = to_string(r.monotone);
  j["rationale"] = r.rationale;
  return j;
}

Json to_json(const HardyRatio& r) {
  Json j;
  j["operator_sum"] = json_real(r.operator_sum);
  j["l1_sum"] = json_real(r.l1_sum);
  j["ratio"] = json_real(r.ratio);
  return j;
}

Json to_json(const ProbeReport& r) {
  Json j;
  j["probe_name"] = r.probe_name;
  j["mean"] = r.mean;
  j["sequence"] = r.sequence;
  j["n_max"] = r.n_max;
  Json sample = Json::array();
  for (const auto& [n, b] : r.ratio_sequence_sample) sample.push_back(Json::array({n, json_real(b)}));
  j["ratio_sequence_sample"] = std::move(sample);
  j["epsilon_hat"] = json_real(r.epsilon_hat);
  j["series_divergence"] = divergence_json(r.series_divergence);
  j["divergence_evidence"] = divergence_json(r.ratio_divergence);
  Json cond = Json::array();
  for (const auto& c : r.condition3) {
    Json e;
    e["s"] = json_real(c.s);
    e["partial_sum"] = json_real(c.partial_sum);
    e["tail_slope"] = json_real(c.tail_slope);
    e["finite"] = c.finite;
    cond.push_back(std::move(e));
  }
  j["condition3"] = std::move(cond);
  j["fit"] = r.fit ? to_json(*r.fit) : Json(nullptr);
  j["verdict"] = to_string(r.verdict);
  j["notes"] = r.notes;
  return j;
}

Json to_json(const GrowthFit& fit) {
  Json j;
  j["C"] = json_real(fit.c);
  j["D"] = json_real(fit.d);
  j["residual"] = json_real(fit.residual);
  j["window"] = Json::array({fit.window_lo, fit.window_hi});
  j["points"] = fit.points;
  return j;
}

Json to_json(const DSequenceResult& r) {
  Json j;
  j["n_max"] = r.d.size();
  j["max_violation"] = json_real(r.max_violation);
  j["passed"] = r.passed;
  j["d"] = vector_json(r.d);
  return j;
}

Json to_json(const MulhollandResult& r) {
  Json j;
  j["best_alpha"] = json_real(r.best_alpha);
  j["best_c"] = json_real(r.best_c);
  Json cands = Json::array();
  for (const auto& c : r.candidates) {
    Json e;
    e["alpha"] = json_real(c.alpha);
    e["empirical_c"] = json_real(c.empirical_c);
    e["witness"] = vector_json(c.witness);
    cands.push_back(std::move(e));
  }
  j["candidates"] = std::move(cands);
  return j;
}

Json to_json(const AxiomReport& r) {
  Json j;
  j["axiom"] = to_string(r.axiom);
  j["passed"] = r.passed;
  j["trials"] = r.trials;
  if (r.witness) {
    Json w;
    w["vector"] = vector_json(r.witness->vector);
    w["perturbed"] = vector_json(r.witness->perturbed);
    w["lhs"] = json_real(r.witness->lhs);
    w["rhs"] = json_real(r.witness->rhs);
    w["comparison"] = r.witness->comparison;
    j["witness"] = std::move(w);
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

Json to_json(const FamilySearchResult& r) {
  Json j;
  j["mean"] = r.mean;
  j["family"] = r.family;
  j["best_params"] = vector_json(r.best_params);
  j["best_ratio"] = json_real(r.best_ratio);
  Json curve = Json::array();
  for (const auto& [p, v] : r.ratio_curve) curve.push_back(Json::array({json_real(p), json_real(v)}));
  j["ratio_curve"] = std::move(curve);
  j["n_max_used"] = r.n_max_used;
  return j;
}

Json to_json(const CounterexampleResult& r) {
  Json j;
  j["N"] = r.n;
  j["n_cut"] = r.n_cut;
  j["partial_sum_N"] = json_real(r.partial_sum_n);
  j["lower_bound"] = json_real(r.lower_bound);
  j["full_ratio"] = json_real(r.full_ratio);
  j["bound_6pi2"] = json_real(r.bound_6pi2);
  j["partial_sum_holds"] = r.partial_sum_holds;
  j["ratio_holds"] = r.ratio_holds;
  return j;
}

Json to_json(const GiniLimitResult& r) {
  Json j;
  j["prefix_mean"] = json_real(r.prefix_mean);
  j["closed_form"] = json_real(r.closed_form);
  j["abs_err"] = json_real(r.abs_err);
  return j;
}

CsvWriter::CsvWriter(std::ostream& out, std::initializer_list<std::string> header)
    : out_(out), columns_(header.size()) {
  for (const auto& h : header) {
    separator();
    out_ << h;
  }
  end_row();
}

void CsvWriter::separator() {
  if (filled_ == columns_) throw Error("csv row has too many cells");
  if (filled_ > 0) out_ << ',';
  ++filled_;
}

CsvWriter& CsvWriter::cell(double x) {
  separator();
  out_ << format_exact(x);
  return *this;
}

CsvWriter& CsvWriter::cell(std::size_t n) {
  separator();
  out_ << n;
  return *this;
}

CsvWriter& CsvWriter::cell(const std::string& s) {
  separator();
  if (s.find_first_of(",\"\n") == std::string::npos) {
    out_ << s;
    return *this;
  }
  out_ << '"';
  for (const char c : s) {
    if (c == '"') out_ << '"';
    out_ << c;
  }
  out_ << '"';
  return *this;
}

void CsvWriter::end_row() {
  if (filled_ != columns_) throw Error("csv row has too few cells");
  out_ << '\n';
  filled_ = 0;
}

}  // namespace hardy
