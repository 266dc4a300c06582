#include <chrono>
#include <fstream>

#include "json.hpp"
#include "sicache/experiment.h"

namespace sicache {

std::string RunManifest::to_json() const {
  nlohmann::ordered_json doc;
  doc["artifact"] = "sicache";
  doc["version"] = kArtifactVersion;
  doc["schema_version"] = kSchemaVersion;
  doc["run"] = run_name;
  doc["seed"] = seed;
  doc["threads"] = threads;
  doc["config"] = nlohmann::ordered_json::parse(config_source);
  auto& list = doc["experiments"] = nlohmann::ordered_json::array();
  for (const ExperimentRecord& e : experiments) {
    list.push_back({{"name", e.name},
                    {"kind", to_string(e.kind)},
                    {"csv", e.csv_path.filename().string()},
                    {"rows", e.rows},
                    {"error_cells", e.error_cells},
                    {"seed", e.seed},
                    {"wall_seconds", e.wall_seconds},
                    {"columns", e.columns}});
  }
  return doc.dump(2) + "\n";
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

}  // namespace

RunManifest run_all(const RunConfig& config, const RunOptions& options) {
  std::filesystem::create_directories(options.out_dir);
  RunManifest manifest;
  manifest.run_name = config.name;
  manifest.seed = options.seed.value_or(config.seed);
  manifest.threads = options.threads;
  manifest.config_source = config.source;
  for (const ExperimentSpec& spec : config.experiments) {
    ExperimentRecord record;
    record.name = spec.name;
    record.kind = spec.kind;
    record.seed = options.seed.value_or(spec.seed.value_or(config.seed));
    record.columns = columns_for(spec.kind);
    const auto start = std::chrono::steady_clock::now();
    const CsvTable table = run_experiment(spec, record.seed, options.threads);
    record.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    record.rows = static_cast<long>(table.rows.size());
    record.error_cells = table.error_cells;
    record.csv_path = options.out_dir / (spec.name + ".csv");
    write_file(record.csv_path, table.to_string());
    manifest.experiments.push_back(std::move(record));
  }
  write_file(options.out_dir / ("manifest." + config.name), manifest.to_json());
  return manifest;
}

}  // namespace sicache
