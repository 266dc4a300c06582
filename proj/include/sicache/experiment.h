#ifndef SICACHE_EXPERIMENT_H_
#define SICACHE_EXPERIMENT_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sicache/optimizer.h"

namespace sicache {

// Invalid experiment configuration; the message starts with the path of the
// offending field, e.g. "experiments[1].coding.n: must be at least 1".
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class ExperimentKind {
  kValidateQk,   // analytic vs simulated layer success probabilities
  kValidateFot,  // analytic vs simulated FOT and ergodic rate, m = 1..n
  kFotCurve,     // L[m] and its continuous extension
  kAfotSweep,    // AFOT of every AFOT placement method per sweep point
  kAerSweep,     // AER of every AER placement method per sweep point
  kAlgCompare,   // one row per method per sweep point
  kDiffTable,    // first-difference table with labels
};

enum class SweepAxis { kNone, kCacheFiles, kGamma, kTauDb, kN };

std::string_view to_string(ExperimentKind kind);
std::string_view to_string(SweepAxis axis);

// 10^(db / 10).
double convert_db(double db);

struct SimulationSpec {
  double lambda_b = 100.0;
  double region_side = 4.0;
  long trials = 100000;
};

// One experiment with every parameter at its base value; the sweep axis, if
// any, overrides one of them per sweep point.
struct ExperimentSpec {
  std::string name;
  ExperimentKind kind = ExperimentKind::kDiffTable;
  double alpha = 4.0;
  double tau_db = 0.0;
  int n = 1;
  int cache_files = 1;
  int num_files = 1;
  double gamma = 0.0;
  Objective objective = Objective::kAfot;  // kAlgCompare only
  int layers = 5;                          // kValidateQk only
  SweepAxis axis = SweepAxis::kNone;
  std::vector<double> values;
  std::optional<SimulationSpec> simulation;
  std::optional<std::uint64_t> seed;

  // Parameters at one sweep point (the base values when axis is kNone).
  ExperimentSpec at(double value) const;
  std::vector<double> sweep_points() const;
};

struct RunConfig {
  std::string name;
  std::uint64_t seed = 1;
  std::vector<ExperimentSpec> experiments;
  std::string source;  // the configuration document as given
};

// Parses and validates a JSON run configuration. Throws ConfigError.
RunConfig parse_run_config(std::string_view text);
RunConfig load_run_config(const std::filesystem::path& path);

// Reals are written with 12 significant digits.
std::string format_real(double value);

inline constexpr std::string_view kInstanceTooLargeMarker = "error:instance_too_large";
inline constexpr std::string_view kInfeasibleMarker = "error:infeasible";

struct CsvTable {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  long error_cells = 0;

  std::string to_string() const;
};

// Column set of each experiment kind; part of the manifest schema.
std::vector<std::string> columns_for(ExperimentKind kind);

// Runs one experiment. `seed` drives the simulator; `threads` is the number
// of simulator workers and never changes the output.
CsvTable run_experiment(const ExperimentSpec& spec, std::uint64_t seed, int threads = 1);

struct RunOptions {
  std::filesystem::path out_dir = ".";
  std::optional<std::uint64_t> seed;  // overrides every seed in the config
  int threads = 1;
};

struct ExperimentRecord {
  std::string name;
  ExperimentKind kind;
  std::filesystem::path csv_path;
  long rows = 0;
  long error_cells = 0;
  std::uint64_t seed = 0;
  double wall_seconds = 0.0;
  std::vector<std::string> columns;
};

struct RunManifest {
  std::string run_name;
  std::uint64_t seed = 0;
  int threads = 1;
  std::string config_source;
  std::vector<ExperimentRecord> experiments;

  std::string to_json() const;
};

inline constexpr std::string_view kArtifactVersion = "1.0.0";
inline constexpr int kSchemaVersion = 1;

// Runs every experiment in order, writing <out>/<experiment>.csv and
// <out>/manifest.<run name>.
RunManifest run_all(const RunConfig& config, const RunOptions& options);

}  // namespace sicache

#endif  // SICACHE_EXPERIMENT_H_
