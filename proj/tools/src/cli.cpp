#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <variant>

#include "hardy/axioms.hpp"
#include "hardy/classification.hpp"
#include "hardy/errors.hpp"
#include "hardy/estimator.hpp"
#include "hardy/format.hpp"
#include "hardy/mean.hpp"
#include "hardy/prefix.hpp"
#include "hardy/probes.hpp"
#include "hardy/report.hpp"
#include "hardy/sequence.hpp"
#include "reproduce.hpp"

namespace hardy::cli {

namespace {

// Where the report goes: --out PATH or the caller's stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw ParameterError("cannot open --out path '" + path + "'");
      stream_ = &file_;
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

std::ofstream open_side_file(const std::string& path, const char* flag) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ParameterError(std::string("cannot open ") + flag + " path '" + path + "'");
  return f;
}

void require_output(const CommandConfig& c, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (c.output == a) return;
  }
  throw ParameterError("--output '" + c.output + "' is not supported by " + c.subcommand);
}

void emit_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

void merge(Json& into, const Json& from) {
  for (const auto& [k, v] : from.items()) into[k] = v;
}

MeanSpec need_mean(const CommandConfig& c) {
  if (c.mean.empty()) throw ParameterError(c.subcommand + " needs --mean");
  return parse_mean(c.mean);
}

SequenceSpec need_seq(const CommandConfig& c) {
  if (c.seq.empty()) throw ParameterError(c.subcommand + " needs --seq");
  return parse_sequence(c.seq);
}

std::uint64_t need_seed(const CommandConfig& c) {
  if (!c.seed) throw ParameterError("randomized commands need an explicit --seed");
  return *c.seed;
}

SamplingRange need_range(const CommandConfig& c) {
  if (c.range.size() != 2 || !(c.range[0] > 0.0 && c.range[0] < c.range[1])) {
    throw ParameterError("--range needs two values 0 < lo < hi");
  }
  return {c.range[0], c.range[1]};
}

int cmd_eval(const CommandConfig& c, std::ostream& out) {
  require_output(c, {"json", "csv"});
  const MeanSpec mean = need_mean(c);
  if (c.values.empty() == c.seq.empty()) {
    throw ParameterError("eval needs exactly one of --values or --seq");
  }
  std::vector<double> values = c.values;
  std::string input = "values";
  if (!c.seq.empty()) {
    const SequenceSpec seq = parse_sequence(c.seq);
    input = format_sequence(seq);
    const std::size_t n = seq.length() ? std::min(*seq.length(), c.n_max) : c.n_max;
    for (std::size_t k = 1; k <= n; ++k) values.push_back(seq.term(k));
  }
  const double value = eval(mean, values);
  Sink sink(c.out_path, out);
  if (c.output == "csv") {
    CsvWriter csv(sink.get(), {"n", "value"});
    csv.cell(values.size()).cell(value).end_row();
    return kExitOk;
  }
  Json j;
  j["command"] = "eval";
  j["mean"] = format_mean(mean);
  j["input"] = input;
  j["n"] = values.size();
  j["value"] = json_real(value);
  emit_json(sink.get(), j);
  return kExitOk;
}

int cmd_transform(const CommandConfig& c, std::ostream& out) {
  require_output(c, {"json", "csv"});
  const MeanSpec mean = need_mean(c);
  const SequenceSpec seq = need_seq(c);
  std::size_t n_max = c.n_max;
  if (seq.length()) n_max = std::min(n_max, *seq.length());
  const std::vector<double> prefix = c.conjugate_p ? conjugate_transform(mean, *c.conjugate_p, seq, n_max)
                                                   : transform(mean, seq, n_max);
  Sink sink(c.out_path, out);
  if (c.output == "csv") {
    CsvWriter csv(sink.get(), {"n", "a_n", "prefix_mean"});
    for (std::size_t k = 1; k <= prefix.size(); ++k) {
      csv.cell(k).cell(seq.term(k)).cell(prefix[k - 1]).end_row();
    }
    return kExitOk;
  }
  Json j;
  j["command"] = "transform";
  j["mean"] = format_mean(mean);
  j["sequence"] = format_sequence(seq);
  j["n_max"] = prefix.size();
  if (c.conjugate_p) {
    j["conjugate_p"] = json_real(*c.conjugate_p);
  } else {
    j["hardy_ratio"] = to_json(hardy_ratio(mean, seq, prefix.size()));
  }
  Json values = Json::array();
  for (const double v : prefix) values.push_back(json_real(v));
  j["prefix_means"] = std::move(values);
  emit_json(sink.get(), j);
  return kExitOk;
}

int cmd_classify(const CommandConfig& c, std::ostream& out) {
  require_output(c, {"json", "csv"});
  const MeanSpec mean = need_mean(c);
  const ClassificationResult r = classify(mean);
  Sink sink(c.out_path, out);
  if (c.output == "csv") {
    CsvWriter csv(sink.get(), {"mean", "hardy", "weak_hardy", "hardy_constant", "monotone", "rationale"});
    csv.cell(format_mean(mean))
        .cell(std::string(to_string(r.hardy)))
        .cell(std::string(to_string(r.weak_hardy)));
    if (r.hardy_constant) {
      csv.cell(*r.hardy_constant);
    } else {
      csv.cell(std::string("unknown"));
    }
    csv.cell(std::string(to_string(r.monotone))).cell(r.rationale).end_row();
    return kExitOk;
  }
  emit_json(sink.get(), to_json(mean, r));
  return kExitOk;
}

void write_table(std::ostream& os, const char* value_name, const std::vector<double>& values,
                 bool from_log) {
  CsvWriter csv(os, {"n", value_name});
  for (std::size_t k = 1; k <= values.size(); ++k) {
    csv.cell(k).cell(from_log ? std::exp(values[k - 1]) : values[k - 1]).end_row();
  }
}

int cmd_probe(const CommandConfig& c, std::ostream& out) {
  require_output(c, {"json", "csv"});
  Json j;
  std::vector<double> table;
  const char* table_name = nullptr;
  bool table_from_log = false;

  if (c.probe == "theorem-main") {
    const MeanSpec mean = need_mean(c);
    const SequenceSpec seq = need_seq(c);
    ProbeReport r = theorem_main_probe(mean, seq, c.s_grid, c.n_max);
    j = to_json(r);
    table = std::move(r.log_b);
    table_name = "b_n";
    table_from_log = true;
  } else if (c.probe == "log-growth") {
    const MeanSpec mean = need_mean(c);
    j["probe_name"] = "log-growth";
    j["mean"] = format_mean(mean);
    j["n_max"] = c.n_max;
    j["fit"] = to_json(log_growth_fit(mean, c.n_max));
  } else if (c.probe == "d-sequence") {
    const MeanSpec mean = need_mean(c);
    DSequenceResult r = d_sequence_check(mean, c.n_max);
    j["probe_name"] = "d-sequence";
    j["mean"] = format_mean(mean);
    merge(j, to_json(r));
    table = std::move(r.d);
    table_name = "d_n";
  } else if (c.probe == "mulholland") {
    const MeanSpec mean = need_mean(c);
    const auto* qa = std::get_if<QuasiArithmeticMean>(&mean);
    if (qa == nullptr) throw ParameterError("mulholland probe needs a qa: mean, got '" + c.mean + "'");
    if (c.alpha_grid.empty()) throw ParameterError("mulholland probe needs --alpha-grid");
    const std::uint64_t seed = need_seed(c);
    const MulhollandResult r = mulholland_search(qa->generator, c.alpha_grid, c.trials, seed, need_range(c));
    j["probe_name"] = "mulholland";
    j["mean"] = format_mean(mean);
    j["seed"] = seed;
    j["trials"] = c.trials;
    j["range"] = Json::array({json_real(c.range[0]), json_real(c.range[1])});
    merge(j, to_json(r));
    if (c.output == "csv") {
      Sink sink(c.out_path, out);
      CsvWriter csv(sink.get(), {"alpha", "empirical_c"});
      for (const auto& cand : r.candidates) csv.cell(cand.alpha).cell(cand.empirical_c).end_row();
      return kExitOk;
    }
  } else if (c.probe == "axioms") {
    const MeanSpec mean = need_mean(c);
    const std::uint64_t seed = need_seed(c);
    std::vector<Axiom> axioms{Axiom::internality, Axiom::symmetry, Axiom::monotonicity,
                              Axiom::homogeneity, Axiom::repetition_invariance};
    if (c.axiom != "all") axioms = {parse_axiom(c.axiom)};
    Json reports = Json::array();
    bool all_passed = true;
    std::vector<AxiomReport> results;
    for (const Axiom a : axioms) {
      results.push_back(check_axiom(mean, a, c.trials, seed, need_range(c)));
      all_passed = all_passed && results.back().passed;
      reports.push_back(to_json(results.back()));
    }
    j["probe_name"] = "axioms";
    j["mean"] = format_mean(mean);
    j["seed"] = seed;
    j["all_passed"] = all_passed;
    j["reports"] = std::move(reports);
    if (c.output == "csv") {
      Sink sink(c.out_path, out);
      CsvWriter csv(sink.get(), {"axiom", "passed", "trials"});
      for (const auto& r : results) {
        csv.cell(std::string(to_string(r.axiom)))
            .cell(std::string(r.passed ? "true" : "false"))
            .cell(static_cast<std::size_t>(r.trials))
            .end_row();
      }
      return kExitOk;
    }
  } else {
    throw ParameterError("unknown --probe '" + c.probe +
                         "'; expected theorem-main, log-growth, d-sequence, mulholland or axioms");
  }

  if (!c.dump_csv.empty()) {
    if (table_name == nullptr) throw ParameterError("--dump-csv applies to theorem-main and d-sequence");
    std::ofstream f = open_side_file(c.dump_csv, "--dump-csv");
    write_table(f, table_name, table, table_from_log);
  }
  Sink sink(c.out_path, out);
  if (c.output == "csv") {
    if (table_name == nullptr) {
      const Json& fit = j["fit"];
      CsvWriter csv(sink.get(), {"C", "D", "residual"});
      csv.cell(fit["C"].get<double>()).cell(fit["D"].get<double>()).cell(fit["residual"].get<double>()).end_row();
    } else {
      write_table(sink.get(), table_name, table, table_from_log);
    }
    return kExitOk;
  }
  emit_json(sink.get(), j);
  return kExitOk;
}

int cmd_estimate(const CommandConfig& c, std::ostream& out) {
  require_output(c, {"json", "csv"});
  const MeanSpec mean = need_mean(c);
  const SequenceFamily family = parse_family(c.family);
  if (c.grid.empty()) throw ParameterError("estimate needs --grid");
  const FamilySearchResult r = estimate_hardy_lower_bound(mean, family, c.grid, c.n_max);
  auto write_curve = [&](std::ostream& os) {
    CsvWriter csv(os, {"param", "ratio"});
    for (const auto& [p, v] : r.ratio_curve) csv.cell(p).cell(v).end_row();
  };
  if (!c.curve_csv.empty()) {
    std::ofstream f = open_side_file(c.curve_csv, "--curve-csv");
    write_curve(f);
  }
  Sink sink(c.out_path, out);
  if (c.output == "csv") {
    write_curve(sink.get());
    return kExitOk;
  }
  emit_json(sink.get(), to_json(r));
  return kExitOk;
}

void print_table(std::ostream& os, const std::vector<ReproduceItem>& items) {
  std::size_t width = 4;
  for (const auto& it : items) width = std::max(width, it.name.size());
  for (const auto& it : items) {
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.2fs", it.seconds);
    os << (it.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(width))
       << it.name << "  " << std::setw(8) << secs << " observed: " << it.observed
       << " | expected: " << it.expected << '\n';
  }
  const auto passed = std::count_if(items.begin(), items.end(), [](const auto& i) { return i.passed; });
  os << passed << "/" << items.size() << " items passed\n";
}

int cmd_reproduce(const CommandConfig& c, std::ostream& out) {
  if (c.reproduce_case == "counterexample") {
    require_output(c, {"json", "table"});
    const CounterexampleResult r = reproduce_counterexample(c.big_n);
    Sink sink(c.out_path, out);
    Json j = to_json(r);
    j["case"] = "counterexample";
    j["mean"] = "qa:paper-example";
    j["sequence"] = "scaledsquares:" + std::to_string(c.big_n);
    emit_json(sink.get(), j);
    return r.partial_sum_holds && r.ratio_holds ? kExitOk : kExitCheckFailed;
  }
  if (c.reproduce_case == "gini-limit") {
    require_output(c, {"json", "table"});
    const GiniLimitResult r = reproduce_gini_limit(c.p, c.q, c.n);
    Sink sink(c.out_path, out);
    Json j;
    j["case"] = "gini-limit";
    j["mean"] = format_mean(GiniMean{c.p, c.q});
    j["sequence"] = "geometric:1,0.5";
    j["n"] = c.n;
    merge(j, to_json(r));
    j["passed"] = r.abs_err < 1e-12;
    emit_json(sink.get(), j);
    return r.abs_err < 1e-12 ? kExitOk : kExitCheckFailed;
  }
  if (c.reproduce_case != "all") {
    throw ParameterError("unknown --case '" + c.reproduce_case + "'; expected all, counterexample or gini-limit");
  }
  require_output(c, {"json", "csv", "table"});
  const std::vector<ReproduceItem> items = reproduce_all(c.only, c.n_scale);
  const bool all_passed = std::all_of(items.begin(), items.end(), [](const auto& i) { return i.passed; });
  Sink sink(c.out_path, out);
  if (c.output == "table") {
    print_table(sink.get(), items);
  } else if (c.output == "csv") {
    CsvWriter csv(sink.get(), {"item", "passed", "observed", "expected", "seconds"});
    for (const auto& it : items) {
      csv.cell(it.name).cell(std::string(it.passed ? "true" : "false")).cell(it.observed).cell(it.expected).cell(it.seconds).end_row();
    }
  } else {
    Json j;
    j["n_scale"] = json_real(c.n_scale);
    Json arr = Json::array();
    for (const auto& it : items) {
      Json e;
      e["item"] = it.name;
      e["passed"] = it.passed;
      e["observed"] = it.observed;
      e["expected"] = it.expected;
      e["seconds"] = it.seconds;
      arr.push_back(std::move(e));
    }
    j["items"] = std::move(arr);
    j["all_passed"] = all_passed;
    emit_json(sink.get(), j);
  }
  return all_passed ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(const CommandConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.subcommand == "eval") return cmd_eval(config, out);
    if (config.subcommand == "transform") return cmd_transform(config, out);
    if (config.subcommand == "classify") return cmd_classify(config, out);
    if (config.subcommand == "probe") return cmd_probe(config, out);
    if (config.subcommand == "estimate") return cmd_estimate(config, out);
    if (config.subcommand == "reproduce") return cmd_reproduce(config, out);
    err << "error: unknown subcommand '" << config.subcommand << "'\n";
    return kExitBadInput;
  } catch (const ParseError& e) {
    const std::string what = e.what();
    err << "error: " << what;
    if (what.find(e.token()) == std::string::npos) err << " (at '" << e.token() << "')";
    err << '\n';
    return kExitBadInput;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const ExhaustedError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

int run_command_line(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CommandConfig c;
  CLI::App app{"Generalized means: evaluation, Hardy classification, probes and estimates", "hardy"};
  app.require_subcommand(1);

  auto common = [&c](CLI::App* sub) {
    sub->add_option("--output", c.output, "json or csv");
    sub->add_option("--out", c.out_path, "write the report to PATH instead of stdout");
  };
  auto mean_opt = [&c](CLI::App* sub) {
    sub->add_option("--mean", c.mean, "power:<a> | gini:<p>,<q> | qa:power:<p> | qa:log | qa:paper-example");
  };
  auto seq_opt = [&c](CLI::App* sub) {
    sub->add_option("--seq", c.seq,
                    "explicit:@FILE | harmonic | geometric:<c>,<r> | powerlaw:<c>,<beta> | "
                    "scaledsquares:<N> | truncharmonic:<N>,<delta>");
  };
  auto n_max_opt = [&c](CLI::App* sub) { sub->add_option("--n-max", c.n_max, "number of terms"); };

  CLI::App* eval_cmd = app.add_subcommand("eval", "Evaluate a mean on a vector or sequence prefix");
  mean_opt(eval_cmd);
  seq_opt(eval_cmd);
  n_max_opt(eval_cmd);
  eval_cmd->add_option("--values", c.values, "comma-separated positive values")->delimiter(',');
  common(eval_cmd);

  CLI::App* transform_cmd = app.add_subcommand("transform", "Prefix means of a sequence");
  mean_opt(transform_cmd);
  seq_opt(transform_cmd);
  n_max_opt(transform_cmd);
  transform_cmd->add_option("--conjugate-p", c.conjugate_p, "report M(a^p)^(1/p), p > 1");
  common(transform_cmd);

  CLI::App* classify_cmd = app.add_subcommand("classify", "Closed-form Hardy classification");
  mean_opt(classify_cmd);
  common(classify_cmd);

  CLI::App* probe_cmd = app.add_subcommand("probe", "Numerical evidence probes");
  mean_opt(probe_cmd);
  seq_opt(probe_cmd);
  n_max_opt(probe_cmd);
  probe_cmd->add_option("--probe", c.probe, "theorem-main | log-growth | d-sequence | mulholland | axioms");
  probe_cmd->add_option("--s-grid", c.s_grid, "exponents s for condition (3)")->delimiter(',');
  probe_cmd->add_option("--alpha-grid", c.alpha_grid, "power exponents < 1")->delimiter(',');
  probe_cmd->add_option("--trials", c.trials, "random samples");
  probe_cmd->add_option("--seed", c.seed, "RNG seed (required by randomized probes)");
  probe_cmd->add_option("--range", c.range, "sampling range lo,hi")->delimiter(',');
  probe_cmd->add_option("--axiom", c.axiom, "axiom name or all");
  probe_cmd->add_option("--dump-csv", c.dump_csv, "write the (n, b_n) or (n, d_n) table to PATH");
  common(probe_cmd);

  CLI::App* estimate_cmd = app.add_subcommand("estimate", "Empirical lower bound on the Hardy constant");
  mean_opt(estimate_cmd);
  n_max_opt(estimate_cmd);
  estimate_cmd->add_option("--family", c.family, "geometric_r | powerlaw_beta | truncharmonic_N");
  estimate_cmd->add_option("--grid", c.grid, "family parameters")->delimiter(',');
  estimate_cmd->add_option("--curve-csv", c.curve_csv, "write (param, ratio) pairs to PATH");
  common(estimate_cmd);

  CLI::App* reproduce_cmd = app.add_subcommand("reproduce", "Run the reproduction checks");
  reproduce_cmd->add_option("--case", c.reproduce_case, "all | counterexample | gini-limit");
  reproduce_cmd->add_option("--N", c.big_n, "N for the counterexample");
  reproduce_cmd->add_option("--p", c.p, "gini-limit p");
  reproduce_cmd->add_option("--q", c.q, "gini-limit q");
  reproduce_cmd->add_option("--n", c.n, "gini-limit prefix length");
  reproduce_cmd->add_option("--only", c.only, "run a single item");
  reproduce_cmd->add_option("--n-scale", c.n_scale, "shrink the heavy items, in (0, 1]");
  CLI::Option* reproduce_output = reproduce_cmd->add_option("--output", c.output, "table, json or csv");
  reproduce_cmd->add_option("--out", c.out_path, "write the report to PATH instead of stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  }
  for (const CLI::App* sub : app.get_subcommands()) c.subcommand = sub->get_name();
  if (c.subcommand == "reproduce" && reproduce_output->count() == 0) c.output = "table";
  return run(c, out, err);
}

}  // namespace hardy::cli
