#include <cmath>
#include <optional>
#include <string>

#include "internal.h"
#include "sicache/analytics.h"
#include "sicache/errors.h"
#include "sicache/experiment.h"
#include "sicache/optimizer.h"
#include "sicache/simulator.h"

namespace sicache {
namespace {

using Row = std::vector<std::string>;

std::string integer(long v) { return std::to_string(v); }

PlacementProblem problem_for(const ExperimentSpec& s, Objective objective) {
  return PlacementProblem{ChannelModel(s.alpha, convert_db(s.tau_db)),
                          CodingConfig(s.n, s.cache_files),
                          PopularityProfile::zipf(s.num_files, s.gamma), objective};
}

// Runs a guarded solver; on a guard violation returns the error marker.
template <typename Solve>
std::optional<PlacementSolution> guarded(Solve solve, std::string* marker) {
  try {
    return solve();
  } catch (const InstanceTooLargeError&) {
    *marker = std::string(kInstanceTooLargeMarker);
  } catch (const InfeasibleError&) {
    *marker = std::string(kInfeasibleMarker);
  }
  return std::nullopt;
}

std::string fractions_to_string(const ContinuousAllocation& allocation) {
  std::string out;
  for (std::size_t j = 0; j < allocation.fractions.size(); ++j) {
    if (j) out += ' ';
    out += format_real(allocation.fractions[j]);
  }
  return out;
}

void validate_qk(const ExperimentSpec& spec, std::uint64_t seed, int threads,
                 CsvTable* table) {
  const SicEnsemble ensemble = SicEnsemble::simulate(
      internal::simulation_config(spec, spec.layers, seed), threads);
  for (double v : spec.sweep_points()) {
    const ExperimentSpec s = spec.at(v);
    const LayerModel layers(s.alpha, convert_db(s.tau_db));
    const LayerSuccessEstimate e =
        estimate_layer_success(ensemble, convert_db(s.tau_db), s.layers);
    for (int k = 1; k <= s.layers; ++k) {
      const auto& q = e.conditional[k - 1];
      table->rows.push_back({format_real(s.alpha), format_real(s.tau_db), integer(k),
                             format_real(layers.layer_success(k)),
                             q ? format_real(q->value) : "undefined",
                             q ? format_real(q->std_error) : "undefined",
                             integer(e.reached[k - 1]), format_real(layers.chain_success(k)),
                             format_real(e.chain(k))});
    }
  }
}

void validate_fot(const ExperimentSpec& spec, std::uint64_t seed, int threads,
                  CsvTable* table) {
  const SicEnsemble ensemble =
      SicEnsemble::simulate(internal::simulation_config(spec, spec.n, seed), threads);
  const std::vector<double> rates = ergodic_rate_table(spec.alpha, spec.n);
  for (double v : spec.sweep_points()) {
    const ExperimentSpec s = spec.at(v);
    const double tau = convert_db(s.tau_db);
    const LayerModel layers(s.alpha, tau);
    for (int m = 1; m <= s.n; ++m) {
      const Estimate f = estimate_fot(ensemble, tau, s.n, m);
      const Estimate r = estimate_ergodic_rate(ensemble, s.n, m);
      table->rows.push_back({format_real(s.alpha), format_real(s.tau_db), integer(s.n),
                             integer(m), format_real(layers.fot(s.n, m)),
                             format_real(f.value), format_real(f.std_error),
                             format_real(rates[m]), format_real(r.value),
                             format_real(r.std_error)});
    }
  }
}

void fot_curve(const ExperimentSpec& spec, CsvTable* table) {
  for (double v : spec.sweep_points()) {
    const ExperimentSpec s = spec.at(v);
    const DifferenceTable diff = difference_table(ChannelModel(s.alpha, convert_db(s.tau_db)), s.n);
    for (int m = 0; m <= s.n; ++m) {
      table->rows.push_back({format_real(s.alpha), format_real(s.tau_db), integer(s.n),
                             integer(m), format_real(static_cast<double>(m) / s.n),
                             format_real(diff.fot_values[m]),
                             m == 0 ? "" : format_real(diff.delta(m))});
    }
  }
}

void diff_table(const ExperimentSpec& spec, CsvTable* table) {
  for (double v : spec.sweep_points()) {
    const ExperimentSpec s = spec.at(v);
    const DifferenceTable diff = difference_table(ChannelModel(s.alpha, convert_db(s.tau_db)), s.n);
    for (int m = 1; m <= s.n; ++m) {
      const DeltaLabel& label = diff.label(m);
      table->rows.push_back({format_real(s.alpha), format_real(s.tau_db), integer(s.n),
                             integer(m), integer(label.region),
                             integer(label.previous_region), label.to_string(),
                             format_real(diff.fot_values[m]), format_real(diff.delta(m)),
                             integer(diff.distinct_count)});
    }
  }
}

void afot_sweep(const ExperimentSpec& spec, CsvTable* table) {
  for (double v : spec.sweep_points()) {
    const ExperimentSpec s = spec.at(v);
    const PlacementProblem problem = problem_for(s, Objective::kAfot);
    const PlacementSolution greedy = solve_afot_greedy(problem);
    const PlacementSolution rounding = solve_afot_rounding(problem);
    const ContinuousSolution continuous = solve_afot_continuous(problem);
    const PlacementSolution mpc = solve_mpc(problem);
    std::string marker;
    const auto exhaustive = guarded([&] { return solve_exhaustive(problem); }, &marker);
    if (!exhaustive) ++table->error_cells;
    const double gap =
        (continuous.objective_value - greedy.objective_value) / continuous.objective_value;
    table->rows.push_back(
        {integer(s.num_files), integer(s.n), integer(s.cache_files), format_real(s.gamma),
         format_real(s.alpha), format_real(s.tau_db), format_real(greedy.objective_value),
         format_real(rounding.objective_value), format_real(continuous.objective_value),
         format_real(mpc.objective_value),
         exhaustive ? format_real(exhaustive->objective_value) : marker,
         integer(greedy.updates),
         format_real(greedy_update_bound(s.n, s.num_files, s.cache_files)),
         integer(rounding.updates), format_real(gap), greedy.placement.to_string()});
  }
}

void aer_sweep(const ExperimentSpec& spec, CsvTable* table) {
  for (double v : spec.sweep_points()) {
    const ExperimentSpec s = spec.at(v);
    const PlacementProblem problem = problem_for(s, Objective::kAer);
    const PlacementSolution heuristic = solve_aer_heuristic(problem);
    const PlacementSolution mpc = solve_mpc(problem);
    std::string marker;
    const auto exhaustive = guarded([&] { return solve_exhaustive(problem); }, &marker);
    if (!exhaustive) table->error_cells += 2;
    table->rows.push_back(
        {integer(s.num_files), integer(s.n), integer(s.cache_files), format_real(s.gamma),
         format_real(s.alpha), format_real(heuristic.objective_value),
         format_real(mpc.objective_value),
         exhaustive ? format_real(exhaustive->objective_value) : marker,
         integer(heuristic.updates), heuristic.placement.to_string(),
         exhaustive ? exhaustive->placement.to_string() : marker});
  }
}

void alg_compare(const ExperimentSpec& spec, CsvTable* table) {
  for (double v : spec.sweep_points()) {
    const ExperimentSpec s = spec.at(v);
    const PlacementProblem problem = problem_for(s, spec.objective);
    const Row prefix = {integer(s.num_files), integer(s.n),       integer(s.cache_files),
                        format_real(s.gamma), format_real(s.alpha), format_real(s.tau_db),
                        std::string(to_string(spec.objective))};
    auto emit = [&](Method method, std::optional<PlacementSolution> solution,
                    const std::string& marker) {
      Row row = prefix;
      row.push_back(std::string(to_string(method)));
      if (solution) {
        row.insert(row.end(), {format_real(solution->objective_value),
                               integer(solution->updates), solution->placement.to_string(),
                               "ok"});
      } else {
        row.insert(row.end(), {"", "", "", marker});
        ++table->error_cells;
      }
      table->rows.push_back(std::move(row));
    };
    std::string marker;
    if (spec.objective == Objective::kAfot) {
      emit(Method::kGreedy, solve_afot_greedy(problem), "");
      emit(Method::kRounding, solve_afot_rounding(problem), "");
      const ContinuousSolution continuous = solve_afot_continuous(problem);
      Row row = prefix;
      row.insert(row.end(), {std::string(to_string(Method::kContinuous)),
                             format_real(continuous.objective_value), "0",
                             fractions_to_string(continuous.allocation), "ok"});
      table->rows.push_back(std::move(row));
    } else {
      emit(Method::kHeuristicAer, solve_aer_heuristic(problem), "");
    }
    emit(Method::kMpc, solve_mpc(problem), "");
    emit(Method::kExhaustive, guarded([&] { return solve_exhaustive(problem); }, &marker),
         marker);
  }
}

}  // namespace

CsvTable run_experiment(const ExperimentSpec& spec, std::uint64_t seed, int threads) {
  CsvTable table;
  table.columns = columns_for(spec.kind);
  switch (spec.kind) {
    case ExperimentKind::kValidateQk: validate_qk(spec, seed, threads, &table); break;
    case ExperimentKind::kValidateFot: validate_fot(spec, seed, threads, &table); break;
    case ExperimentKind::kFotCurve: fot_curve(spec, &table); break;
    case ExperimentKind::kAfotSweep: afot_sweep(spec, &table); break;
    case ExperimentKind::kAerSweep: aer_sweep(spec, &table); break;
    case ExperimentKind::kAlgCompare: alg_compare(spec, &table); break;
    case ExperimentKind::kDiffTable: diff_table(spec, &table); break;
  }
  return table;
}

}  // namespace sicache
