#include "hardy/sequence.hpp"

#include <charconv>
#include <cmath>
#include <fstream>

#include "hardy/errors.hpp"
#include "hardy/format.hpp"
#include "overloaded.hpp"

namespace hardy {

using detail::overloaded;

namespace {

constexpr double kLn2 = 0.693147180559945309417232121458176568;

void validate(const SequenceSpec::Variant& v) {
  std::visit(
      overloaded{
          [](const ExplicitSequence& s) {
            if (s.values.empty()) throw ParameterError("explicit sequence is empty");
            for (std::size_t i = 0; i < s.values.size(); ++i) {
              const double x = s.values[i];
              if (!(x > 0.0 && std::isfinite(x))) {
                throw DomainError("explicit sequence term " + std::to_string(i + 1) + " = " +
                                  format_shortest(x) + " is not strictly positive");
              }
            }
          },
          [](const HarmonicSequence&) {},
          [](const GeometricSequence& s) {
            if (!(s.c > 0.0 && std::isfinite(s.c))) throw ParameterError("geometric c must be > 0");
            if (!(s.r > 0.0 && s.r < 1.0)) throw ParameterError("geometric r must lie in (0, 1)");
          },
          [](const PowerLawSequence& s) {
            if (!(s.c > 0.0 && std::isfinite(s.c))) throw ParameterError("powerlaw c must be > 0");
            if (!(s.beta > 1.0 && std::isfinite(s.beta))) {
              throw ParameterError("powerlaw beta must be > 1");
            }
          },
          [](const ScaledSquaresSequence& s) {
            if (s.n < 1) throw ParameterError("scaledsquares N must be >= 1");
          },
          [](const TruncatedHarmonicSequence& s) {
            if (s.n < 1) throw ParameterError("truncharmonic N must be >= 1");
            if (!(s.delta > 0.0 && std::isfinite(s.delta))) {
              throw ParameterError("truncharmonic delta must be > 0");
            }
          },
      },
      v);
}

double parse_number(const std::string& token, const std::string& what) {
  double value = 0.0;
  if (!parse_real(token, value) || !std::isfinite(value)) {
    throw ParseError("expected a finite number for " + what, token);
  }
  return value;
}

std::size_t parse_count(const std::string& token, const std::string& what) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError("expected a positive integer for " + what, token);
  }
  return value;
}

std::pair<std::string, std::string> split_pair(const std::string& args, const std::string& whole) {
  const auto comma = args.find(',');
  if (comma == std::string::npos) throw ParseError("expected two comma-separated parameters", whole);
  return {args.substr(0, comma), args.substr(comma + 1)};
}

}  // namespace

SequenceSpec::SequenceSpec(Variant v) : v_(std::move(v)) { validate(v_); }

SequenceSpec SequenceSpec::explicit_values(std::vector<double> values, std::string source) {
  return SequenceSpec(ExplicitSequence{std::move(values), std::move(source)});
}

double SequenceSpec::term(std::size_t n) const {
  if (n < 1) throw ParameterError("sequence indices start at 1");
  const double k = static_cast<double>(n);
  return std::visit(
      overloaded{
          [n](const ExplicitSequence& s) {
            if (n > s.values.size()) {
              throw ExhaustedError("explicit sequence has " + std::to_string(s.values.size()) +
                                   " terms; term " + std::to_string(n) + " requested");
            }
            return s.values[n - 1];
          },
          [k](const HarmonicSequence&) { return 1.0 / k; },
          [k](const GeometricSequence& s) { return s.c * std::pow(s.r, k - 1.0); },
          [k](const PowerLawSequence& s) { return s.c * std::pow(k, -s.beta); },
          [k](const ScaledSquaresSequence& s) {
            const double ratio = static_cast<double>(s.n) / k;
            return ratio * ratio;
          },
          [n, k](const TruncatedHarmonicSequence& s) {
            if (n <= s.n) return 1.0 / k;
            return s.delta * std::exp2(-static_cast<double>(n - s.n));
          },
      },
      v_);
}

double SequenceSpec::log_term(std::size_t n) const {
  if (n < 1) throw ParameterError("sequence indices start at 1");
  const double k = static_cast<double>(n);
  return std::visit(
      overloaded{
          [this, n](const ExplicitSequence&) { return std::log(term(n)); },
          [k](const HarmonicSequence&) { return -std::log(k); },
          [k](const GeometricSequence& s) { return std::log(s.c) + (k - 1.0) * std::log(s.r); },
          [k](const PowerLawSequence& s) { return std::log(s.c) - s.beta * std::log(k); },
          [k](const ScaledSquaresSequence& s) {
            return 2.0 * (std::log(static_cast<double>(s.n)) - std::log(k));
          },
          [n, k](const TruncatedHarmonicSequence& s) {
            if (n <= s.n) return -std::log(k);
            return std::log(s.delta) - static_cast<double>(n - s.n) * kLn2;
          },
      },
      v_);
}

std::optional<std::size_t> SequenceSpec::length() const noexcept {
  if (const auto* e = std::get_if<ExplicitSequence>(&v_)) return e->values.size();
  return std::nullopt;
}

bool SequenceSpec::summable() const noexcept {
  return !std::holds_alternative<HarmonicSequence>(v_);
}

std::vector<double> read_values_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open sequence file '" + path + "'");
  std::vector<double> values;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
      line.pop_back();
    }
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    line.erase(0, first);
    double x = 0.0;
    if (!parse_real(line, x)) {
      throw ParseError("line " + std::to_string(line_no) + " of '" + path + "' is not a number",
                       line);
    }
    if (!(x > 0.0 && std::isfinite(x))) {
      throw DomainError("line " + std::to_string(line_no) + " of '" + path +
                        "' is not strictly positive: " + line);
    }
    values.push_back(x);
  }
  return values;
}

SequenceSpec parse_sequence(std::string_view text) {
  const std::string s(text);
  const auto colon = s.find(':');
  const std::string head = s.substr(0, colon);
  const std::string args = colon == std::string::npos ? std::string() : s.substr(colon + 1);
  const bool has_args = colon != std::string::npos;

  if (head == "harmonic") {
    if (has_args) throw ParseError("harmonic takes no parameters", args);
    return SequenceSpec::harmonic();
  }
  if (!has_args) throw ParseError("sequence family needs parameters", s);
  if (head == "explicit") {
    if (args.empty() || args.front() != '@') {
      throw ParseError("explicit sequences are read from a file: explicit:@path", args);
    }
    const std::string path = args.substr(1);
    return SequenceSpec::explicit_values(read_values_file(path), path);
  }
  if (head == "geometric") {
    const auto [c, r] = split_pair(args, s);
    return SequenceSpec::geometric(parse_number(c, "geometric c"), parse_number(r, "geometric r"));
  }
  if (head == "powerlaw") {
    const auto [c, beta] = split_pair(args, s);
    return SequenceSpec::power_law(parse_number(c, "powerlaw c"),
                                   parse_number(beta, "powerlaw beta"));
  }
  if (head == "scaledsquares") return SequenceSpec::scaled_squares(parse_count(args, "scaledsquares N"));
  if (head == "truncharmonic") {
    const auto [n, delta] = split_pair(args, s);
    return SequenceSpec::truncated_harmonic(parse_count(n, "truncharmonic N"),
                                            parse_number(delta, "truncharmonic delta"));
  }
  throw ParseError("unknown sequence family", head);
}

std::string format_sequence(const SequenceSpec& seq) {
  return std::visit(
      overloaded{
          [](const ExplicitSequence& s) { return "explicit:@" + s.source; },
          [](const HarmonicSequence&) { return std::string("harmonic"); },
          [](const GeometricSequence& s) {
            return "geometric:" + format_shortest(s.c) + "," + format_shortest(s.r);
          },
          [](const PowerLawSequence& s) {
            return "powerlaw:" + format_shortest(s.c) + "," + format_shortest(s.beta);
          },
          [](const ScaledSquaresSequence& s) { return "scaledsquares:" + std::to_string(s.n); },
          [](const TruncatedHarmonicSequence& s) {
            return "truncharmonic:" + std::to_string(s.n) + "," + format_shortest(s.delta);
          },
      },
      seq.variant());
}

}  // namespace hardy
