#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hardy::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitBadInput = 2;
inline constexpr int kExitCheckFailed = 3;

struct CommandConfig {
  std::string subcommand;
  std::string mean;
  std::string seq;
  std::vector<double> values;  // eval --values
  std::size_t n_max = 1000;
  std::optional<std::uint64_t> seed;
  std::string output = "json";
  std::string out_path;

  // transform
  std::optional<double> conjugate_p;

  // probe
  std::string probe = "theorem-main";
  std::vector<double> s_grid{1.0, 2.0};
  std::vector<double> alpha_grid;
  int trials = 1000;
  std::vector<double> range{1e-3, 1e3};
  std::string dump_csv;
  std::string axiom = "all";

  // estimate
  std::string family = "truncharmonic_N";
  std::vector<double> grid;
  std::string curve_csv;

  // reproduce
  std::string reproduce_case = "all";
  std::size_t big_n = 100;
  double p = 0.3;
  double q = 0.7;
  std::size_t n = 200;
  std::string only;
  double n_scale = 1.0;
};

/// Runs one parsed command. Grammar strings are parsed before any work starts.
/// Returns 0 on success, 2 when an input is rejected (the message names it),
/// 3 when a reproduction check fails, 1 on anything unexpected.
int run(const CommandConfig& config, std::ostream& out, std::ostream& err);

/// Parses `args` (without the program name) and runs the command.
int run_command_line(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hardy::cli
