#include <cmath>
#include <cstdio>

#include "sicache/experiment.h"

namespace sicache {
namespace {

std::string quote(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string format_real(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.12g", value);
  return buffer;
}

std::string CsvTable::to_string() const {
  std::string out;
  auto line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += quote(cells[i]);
    }
    out += '\n';
  };
  line(columns);
  for (const auto& row : rows) line(row);
  return out;
}

std::vector<std::string> columns_for(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::kValidateQk:
      return {"alpha", "tau_db", "k", "q_analytic", "q_simulated", "q_std_error",
              "q_samples", "chain_analytic", "chain_simulated"};
    case ExperimentKind::kValidateFot:
      return {"alpha", "tau_db", "n", "m", "fot_analytic", "fot_simulated",
              "fot_std_error", "rate_analytic", "rate_simulated", "rate_std_error"};
    case ExperimentKind::kFotCurve:
      return {"alpha", "tau_db", "n", "m", "x", "fot", "delta"};
    case ExperimentKind::kAfotSweep:
      return {"F", "n", "M", "gamma", "alpha", "tau_db", "afot_greedy", "afot_rounding",
              "afot_continuous_ub", "afot_mpc", "afot_exhaustive", "greedy_updates",
              "update_bound", "rounding_discards", "ub_gap", "greedy_placement"};
    case ExperimentKind::kAerSweep:
      return {"F", "n", "M", "gamma", "alpha", "aer_heuristic", "aer_mpc",
              "aer_exhaustive", "heuristic_updates", "heuristic_placement",
              "exhaustive_placement"};
    case ExperimentKind::kAlgCompare:
      return {"F", "n", "M", "gamma", "alpha", "tau_db", "objective", "method", "value",
              "updates", "placement", "status"};
    case ExperimentKind::kDiffTable:
      return {"alpha", "tau_db", "n", "m", "region", "previous_region", "label", "fot",
              "delta", "distinct_count"};
  }
  return {};
}

}  // namespace sicache
