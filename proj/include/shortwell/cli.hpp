#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace shortwell::cli {

/// Everything a run depends on. Unset optionals are omitted from the echo.
struct RunConfig {
  std::string command;
  std::string model;
  std::string method = "implicit";
  int order = 6;
  std::optional<double> lambda;
  std::optional<std::string> box_length;  // text, so exact series read it exactly
  std::optional<double> beta;
  long n_max = 200;
  int n = 0;
  bool extrapolate = false;
  std::vector<double> blowup_lengths;
  std::string kind;
  std::vector<int> degrees;
  std::optional<double> at;
  std::string series_file;
  std::vector<std::string> asymptotic;
  double lambda_min = 0.0;
  std::optional<double> lambda_max;
  int steps = 10;
  std::vector<std::string> methods{"exact", "series", "pade"};
  std::vector<int> pade_degrees{3, 3};
  std::vector<int> qpade_degrees{2, 2, 1};
  std::vector<int> tppade_degrees;  // default depends on the model
  std::string format = "json";
  std::string output;  // empty: standard output
  std::string plot;    // gnuplot script path (scan)
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumerical = 3;

/// Parses `args` (without the program name), runs one subcommand and writes
/// the result to `out` or to --output. Diagnostics go to `err`. Nothing is
/// written unless the whole computation succeeded.
///
/// A `--config FILE` of key=value lines supplies defaults; explicit flags win.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace shortwell::cli
