#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "internal.h"
#include "json.hpp"
#include "sicache/errors.h"
#include "sicache/experiment.h"
#include "sicache/simulator.h"

namespace sicache {
namespace {

using nlohmann::json;

// Typed access to one JSON object; every error names the field path and
// keys never read are rejected by finish().
class Block {
 public:
  Block(const json& value, std::string path) : value_(value), path_(std::move(path)) {
    if (!value_.is_object()) fail(path_, "must be an object");
  }

  [[noreturn]] static void fail(const std::string& path, const std::string& why) {
    throw ConfigError(path + ": " + why);
  }

  std::string field(const std::string& key) const {
    return path_.empty() ? key : path_ + "." + key;
  }

  bool has(const std::string& key) const { return value_.contains(key); }

  const json& raw(const std::string& key) {
    seen_.insert(key);
    if (!value_.contains(key)) fail(field(key), "is required");
    return value_.at(key);
  }

  double real(const std::string& key, std::optional<double> fallback = std::nullopt) {
    if (!has(key) && fallback) return *fallback;
    const json& v = raw(key);
    if (!v.is_number()) fail(field(key), "must be a number");
    return v.get<double>();
  }

  long integer(const std::string& key, std::optional<long> fallback = std::nullopt) {
    if (!has(key) && fallback) return *fallback;
    const json& v = raw(key);
    if (!v.is_number_integer()) fail(field(key), "must be an integer");
    return v.get<long>();
  }

  std::uint64_t seed(const std::string& key) {
    const json& v = raw(key);
    if (v.is_number_unsigned()) return v.get<std::uint64_t>();
    fail(field(key), "must be a non-negative integer");
  }

  std::string text(const std::string& key, std::optional<std::string> fallback = std::nullopt) {
    if (!has(key) && fallback) return *fallback;
    const json& v = raw(key);
    if (!v.is_string()) fail(field(key), "must be a string");
    return v.get<std::string>();
  }

  std::optional<Block> child(const std::string& key, bool required) {
    if (!has(key)) {
      if (required) fail(field(key), "is required");
      return std::nullopt;
    }
    return Block(raw(key), field(key));
  }

  void finish() const {
    for (const auto& [key, unused] : value_.items()) {
      if (!seen_.contains(key)) fail(field(key), "is not a recognized field");
    }
  }

 private:
  const json& value_;
  std::string path_;
  std::set<std::string> seen_;
};

ExperimentKind parse_kind(const std::string& name, const std::string& path) {
  static const std::pair<const char*, ExperimentKind> kKinds[] = {
      {"ValidateQk", ExperimentKind::kValidateQk}, {"ValidateFot", ExperimentKind::kValidateFot},
      {"FotCurve", ExperimentKind::kFotCurve},     {"AfotSweep", ExperimentKind::kAfotSweep},
      {"AerSweep", ExperimentKind::kAerSweep},     {"AlgCompare", ExperimentKind::kAlgCompare},
      {"DiffTable", ExperimentKind::kDiffTable}};
  for (const auto& [label, kind] : kKinds) {
    if (name == label) return kind;
  }
  Block::fail(path, "unknown experiment kind '" + name + "'");
}

SweepAxis parse_axis(const std::string& name, const std::string& path) {
  if (name == "M") return SweepAxis::kCacheFiles;
  if (name == "gamma") return SweepAxis::kGamma;
  if (name == "tau_db") return SweepAxis::kTauDb;
  if (name == "n") return SweepAxis::kN;
  Block::fail(path, "unknown sweep axis '" + name + "' (expected M, gamma, tau_db or n)");
}

bool is_integral(double v) { return std::isfinite(v) && v == std::floor(v); }

int as_int(long value, const std::string& path, long min) {
  if (value < min || value > std::numeric_limits<int>::max()) {
    Block::fail(path, "must be at least " + std::to_string(min));
  }
  return static_cast<int>(value);
}

// Every sweep point must be a valid instance for the experiment kind.
void validate_point(const ExperimentSpec& s, const std::string& path) {
  if (!(s.alpha > 2.0) || !std::isfinite(s.alpha)) {
    Block::fail(path + "channel.alpha", "path-loss exponent must exceed 2");
  }
  if (!std::isfinite(s.tau_db)) Block::fail(path + "channel.tau_db", "must be finite");
  if (s.n < 1) Block::fail(path + "coding.n", "must be at least 1");
  if (s.cache_files < 1) Block::fail(path + "coding.M", "must be at least 1");
  if (s.num_files < 1) Block::fail(path + "popularity.F", "must be at least 1");
  if (!(s.gamma >= 0.0) || !std::isfinite(s.gamma)) {
    Block::fail(path + "popularity.gamma", "must be non-negative");
  }
  const bool afot_placement =
      s.kind == ExperimentKind::kAfotSweep ||
      (s.kind == ExperimentKind::kAlgCompare && s.objective == Objective::kAfot);
  if (afot_placement && s.cache_files >= s.num_files) {
    Block::fail(path + "coding.M", "must be smaller than popularity.F (M=" +
                                       std::to_string(s.cache_files) +
                                       ", F=" + std::to_string(s.num_files) + ")");
  }
}

ExperimentSpec parse_experiment(const json& value, const std::string& path) {
  Block block(value, path);
  ExperimentSpec s;
  s.name = block.text("name");
  if (s.name.empty() || s.name.find_first_of("/\\") != std::string::npos) {
    Block::fail(block.field("name"), "must be a non-empty file-name-safe string");
  }
  s.kind = parse_kind(block.text("kind"), block.field("kind"));

  if (auto channel = block.child("channel", false)) {
    s.alpha = channel->real("alpha", 4.0);
    s.tau_db = channel->real("tau_db", 0.0);
    channel->finish();
  }
  if (auto coding = block.child("coding", false)) {
    s.n = as_int(coding->integer("n", 1), coding->field("n"), 1);
    s.cache_files = as_int(coding->integer("M", 1), coding->field("M"), 1);
    coding->finish();
  }
  if (auto popularity = block.child("popularity", false)) {
    s.num_files = as_int(popularity->integer("F", 1), popularity->field("F"), 1);
    s.gamma = popularity->real("gamma", 0.0);
    popularity->finish();
  }
  const std::string objective = block.text("objective", "afot");
  if (objective == "afot") {
    s.objective = Objective::kAfot;
  } else if (objective == "aer") {
    s.objective = Objective::kAer;
  } else {
    Block::fail(block.field("objective"), "must be 'afot' or 'aer'");
  }
  s.layers = as_int(block.integer("layers", 5), block.field("layers"), 1);
  if (block.has("seed")) s.seed = block.seed("seed");

  if (auto sweep = block.child("sweep", false)) {
    s.axis = parse_axis(sweep->text("axis"), sweep->field("axis"));
    const json& values = sweep->raw("values");
    if (!values.is_array() || values.empty()) {
      Block::fail(sweep->field("values"), "must be a non-empty list");
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
      const std::string item = sweep->field("values") + "[" + std::to_string(i) + "]";
      if (!values[i].is_number()) Block::fail(item, "must be a number");
      const double v = values[i].get<double>();
      if ((s.axis == SweepAxis::kN || s.axis == SweepAxis::kCacheFiles) && !is_integral(v)) {
        Block::fail(item, "must be an integer");
      }
      s.values.push_back(v);
    }
    sweep->finish();
  }

  if (auto sim = block.child("simulation", false)) {
    SimulationSpec spec;
    spec.lambda_b = sim->real("lambda_b", spec.lambda_b);
    spec.region_side = sim->real("region_side", spec.region_side);
    spec.trials = sim->integer("trials", spec.trials);
    sim->finish();
    s.simulation = spec;
  }
  block.finish();

  const std::string prefix = path + ".";
  const bool simulated =
      s.kind == ExperimentKind::kValidateQk || s.kind == ExperimentKind::kValidateFot;
  if (simulated && !s.simulation) Block::fail(prefix + "simulation", "is required");
  if (simulated && s.axis != SweepAxis::kNone && s.axis != SweepAxis::kTauDb) {
    Block::fail(prefix + "sweep.axis", "simulation experiments sweep tau_db only");
  }
  int max_layers = s.kind == ExperimentKind::kValidateQk ? s.layers : 1;
  for (double v : s.sweep_points()) {
    const ExperimentSpec point = s.at(v);
    validate_point(point, prefix);
    if (s.kind == ExperimentKind::kValidateFot) max_layers = std::max(max_layers, point.n);
  }
  if (s.simulation) {
    try {
      internal::simulation_config(s, max_layers, 0).validate();
    } catch (const DomainError& e) {
      throw ConfigError(prefix + e.what());
    }
  }
  return s;
}

}  // namespace

namespace internal {

SimConfig simulation_config(const ExperimentSpec& spec, int max_layers,
                            std::uint64_t seed) {
  SimConfig cfg;
  cfg.lambda_b = spec.simulation->lambda_b;
  cfg.region_side = spec.simulation->region_side;
  cfg.trials = spec.simulation->trials;
  cfg.alpha = spec.alpha;
  cfg.max_layers = max_layers;
  cfg.master_seed = seed;
  return cfg;
}

}  // namespace internal

std::string_view to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::kValidateQk: return "ValidateQk";
    case ExperimentKind::kValidateFot: return "ValidateFot";
    case ExperimentKind::kFotCurve: return "FotCurve";
    case ExperimentKind::kAfotSweep: return "AfotSweep";
    case ExperimentKind::kAerSweep: return "AerSweep";
    case ExperimentKind::kAlgCompare: return "AlgCompare";
    case ExperimentKind::kDiffTable: return "DiffTable";
  }
  return "unknown";
}

std::string_view to_string(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::kNone: return "none";
    case SweepAxis::kCacheFiles: return "M";
    case SweepAxis::kGamma: return "gamma";
    case SweepAxis::kTauDb: return "tau_db";
    case SweepAxis::kN: return "n";
  }
  return "unknown";
}

double convert_db(double db) { return std::pow(10.0, db / 10.0); }

ExperimentSpec ExperimentSpec::at(double value) const {
  ExperimentSpec point = *this;
  switch (axis) {
    case SweepAxis::kNone: break;
    case SweepAxis::kCacheFiles: point.cache_files = static_cast<int>(value); break;
    case SweepAxis::kGamma: point.gamma = value; break;
    case SweepAxis::kTauDb: point.tau_db = value; break;
    case SweepAxis::kN: point.n = static_cast<int>(value); break;
  }
  point.axis = SweepAxis::kNone;
  point.values.clear();
  return point;
}

std::vector<double> ExperimentSpec::sweep_points() const {
  if (axis == SweepAxis::kNone) return {std::numeric_limits<double>::quiet_NaN()};
  return values;
}

RunConfig parse_run_config(std::string_view text) {
  json document;
  try {
    document = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: invalid JSON: ") + e.what());
  }
  Block root(document, "");
  RunConfig config;
  config.source = std::string(text);
  config.name = root.text("name");
  if (config.name.empty() || config.name.find_first_of("/\\") != std::string::npos) {
    Block::fail("name", "must be a non-empty file-name-safe string");
  }
  config.seed = root.has("seed") ? root.seed("seed") : 1;
  const json& experiments = root.raw("experiments");
  if (!experiments.is_array() || experiments.empty()) {
    Block::fail("experiments", "must be a non-empty list");
  }
  std::set<std::string> names;
  for (std::size_t i = 0; i < experiments.size(); ++i) {
    const std::string path = "experiments[" + std::to_string(i) + "]";
    ExperimentSpec spec = parse_experiment(experiments[i], path);
    if (!names.insert(spec.name).second) {
      Block::fail(path + ".name", "duplicates an earlier experiment name");
    }
    config.experiments.push_back(std::move(spec));
  }
  root.finish();
  return config;
}

RunConfig load_run_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path.string() + ": cannot open config file");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_run_config(text.str());
}

}  // namespace sicache
