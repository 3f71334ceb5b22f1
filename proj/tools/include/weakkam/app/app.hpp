#pragma once

// Experiment configuration and the end-to-end pipeline behind `weakkam run`.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "weakkam/discount.hpp"
#include "weakkam/error.hpp"

namespace weakkam::app {

enum ExitCode : int {
  kExitOk = 0,
  kExitConfig = 2,
  kExitConditionA = 3,
  kExitNoConvergence = 4,
};

class ConfigParseError : public ConfigurationError {
 public:
  ConfigParseError(std::size_t line, const std::string& what)
      : ConfigurationError(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

struct ExperimentConfig {
  std::string preset = "example1";  // example1 | example2 | custom
  std::size_t n = 256;
  std::optional<double> dt;  // unset = dx
  double circumference = 1.0;
  std::optional<double> v_max;
  std::optional<double> p_max;
  // default | one_minus_cos | sin2 | zero | cos2pix | neg_cos2pix | const(c) | samples:path
  std::string potential = "default";
  double custom_drift = 0.0;  // custom: L = (v + drift)^2 / 4 + U(x)

  // cos2pix | neg_cos2pix | const(c) | samples:path
  std::string a = "cos2pix";
  // auto | <index> | at:<position>
  std::string class_select = "auto";
  std::optional<double> A;  // unset = auto
  std::vector<double> lambda_schedule = geometric_schedule(1e-1, 1e-3, 7);
  std::size_t max_iters = 200000;
  std::size_t orbit_steps = 4096;

  std::optional<double> tol_aubry;
  std::optional<double> tol_class;
  std::optional<double> tol_fix;

  std::filesystem::path output_dir = "weakkam-out";
  std::uint64_t seed = 1;

  // Directory that relative samples: paths are resolved against.
  std::filesystem::path base_dir;
};

// Line-oriented `key = value`, '#' comments.  Throws ConfigParseError with
// the offending line number on malformed lines, unknown or repeated keys and
// invalid values.
ExperimentConfig parse_config(const std::string& text,
                              const std::filesystem::path& base_dir = {});
ExperimentConfig load_config(const std::filesystem::path& path);

struct RunSummary {
  int exit_code = kExitOk;
  std::string message;
  std::size_t checks_failed = 0;
};

// Runs the pipeline and writes profiles.csv, convergence.csv and report.txt
// into config.output_dir.  Never throws for library errors; they are mapped
// to exit codes.
RunSummary run_experiment(const ExperimentConfig& config);

}  // namespace weakkam::app
