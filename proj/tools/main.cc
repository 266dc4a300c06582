// Command-line front end: runs or validates experiment configurations.

#include <cstdint>
#include <cstdio>
#include <exception>
#include <string>

#include "CLI11.hpp"
#include "sicache/experiment.h"

int main(int argc, char** argv) {
  CLI::App app{"Coded cache placement experiments for SIC small-cell networks"};
  app.require_subcommand(1);

  std::string run_config;
  std::string out_dir = "results";
  std::uint64_t seed = 0;
  int threads = 1;
  CLI::App* run = app.add_subcommand("run", "Run every experiment in a config file");
  run->add_option("config", run_config, "JSON configuration file")->required()->check(CLI::ExistingFile);
  run->add_option("--out", out_dir, "Output directory for CSV files and the manifest")
      ->capture_default_str();
  CLI::Option* seed_option =
      run->add_option("--seed", seed, "Simulation seed; overrides the config");
  run->add_option("--threads", threads, "Simulator worker threads")
      ->check(CLI::Range(1, 1024))
      ->capture_default_str();

  std::string validate_config;
  CLI::App* validate = app.add_subcommand("validate", "Check a config file without running it");
  validate->add_option("config", validate_config, "JSON configuration file")
      ->required()
      ->check(CLI::ExistingFile);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate) {
      const sicache::RunConfig config = sicache::load_run_config(validate_config);
      std::printf("%s: %zu experiment(s) OK\n", config.name.c_str(), config.experiments.size());
      for (const auto& e : config.experiments) {
        std::printf("  %s (%s, %zu point(s))\n", e.name.c_str(),
                    std::string(sicache::to_string(e.kind)).c_str(), e.sweep_points().size());
      }
      return 0;
    }
    const sicache::RunConfig config = sicache::load_run_config(run_config);
    sicache::RunOptions options;
    options.out_dir = out_dir;
    options.threads = threads;
    if (*seed_option) options.seed = seed;
    const sicache::RunManifest manifest = sicache::run_all(config, options);
    for (const auto& e : manifest.experiments) {
      std::printf("%-24s %6ld rows %4ld errors %8.2fs -> %s\n", e.name.c_str(), e.rows,
                  e.error_cells, e.wall_seconds, e.csv_path.string().c_str());
    }
    return 0;
  } catch (const sicache::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
