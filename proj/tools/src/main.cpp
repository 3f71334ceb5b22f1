#include <CLI11.hpp>

#include <cstdio>
#include <iostream>

#include "weakkam/app/app.hpp"
#include "weakkam/oracle/oracle.hpp"

int main(int argc, char** argv) {
  CLI::App cli{"weakkam: semi-discrete weak KAM toolkit"};
  cli.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  auto* run = cli.add_subcommand("run", "run an experiment from a config file");
  run->add_option("config", config_path, "config file (key = value lines)")->required();
  run->add_option("--out", out_dir, "output directory (overrides output.dir)");

  std::uint64_t seed = 1;
  auto* oracle = cli.add_subcommand("oracle", "run the brute-force oracle suites");
  oracle->add_option("--seed", seed, "seed for the random instance generators");

  try {
    cli.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = cli.exit(e);
    return rc == 0 ? 0 : weakkam::app::kExitConfig;
  }

  if (*run) {
    weakkam::app::ExperimentConfig cfg;
    try {
      cfg = weakkam::app::load_config(config_path);
    } catch (const weakkam::ConfigurationError& e) {
      std::cerr << "weakkam: " << config_path << ": " << e.what() << "\n";
      return weakkam::app::kExitConfig;
    }
    if (!out_dir.empty()) cfg.output_dir = out_dir;
    const auto summary = weakkam::app::run_experiment(cfg);
    std::cout << "output: " << cfg.output_dir.string() << "\n";
    if (summary.exit_code == weakkam::app::kExitOk) {
      std::cout << summary.message << "\n";
    } else {
      std::cerr << "weakkam: " << summary.message << "\n";
    }
    return summary.exit_code;
  }

  bool all = true;
  for (const auto& r : weakkam::oracle::run_oracle_suites(seed)) {
    std::printf("%s %s (%s)\n", r.passed ? "PASS" : "FAIL", r.name.c_str(), r.detail.c_str());
    all = all && r.passed;
  }
  return all ? 0 : 1;
}
