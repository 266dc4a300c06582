#include <cmath>

#include "internal.h"
#include "sicache/errors.h"
#include "sicache/optimizer.h"

namespace sicache {

std::string_view to_string(Objective objective) {
  switch (objective) {
    case Objective::kAfot: return "afot";
    case Objective::kAer: return "aer";
  }
  return "unknown";
}

std::string_view to_string(Method method) {
  switch (method) {
    case Method::kGreedy: return "greedy";
    case Method::kContinuous: return "continuous";
    case Method::kRounding: return "rounding";
    case Method::kHeuristicAer: return "heuristic";
    case Method::kExhaustive: return "exhaustive";
    case Method::kMpc: return "mpc";
  }
  return "unknown";
}

namespace internal {

std::vector<double> objective_table(const PlacementProblem& problem) {
  if (problem.objective == Objective::kAer) {
    return ergodic_rate_table(problem.channel.alpha(), problem.n());
  }
  return difference_table(problem.channel, problem.n()).fot_values;
}

double weighted_sum(const PopularityProfile& popularity,
                    const std::vector<double>& table, const CachingVector& placement) {
  double total = 0.0;
  for (int j = 0; j < placement.num_files(); ++j) {
    total += popularity[j] * table[placement[j]];
  }
  return total;
}

int cheapest_removal(const PopularityProfile& popularity,
                     const std::vector<double>& table, const CachingVector& placement,
                     int limit) {
  int best = -1;
  double best_loss = 0.0;
  for (int j = 0; j < limit; ++j) {
    const int m = placement[j];
    if (m == 0) continue;
    const double loss = popularity[j] * (table[m] - table[m - 1]);
    if (best < 0 || loss <= best_loss + kObjectiveTieTolerance) {
      if (best < 0 || loss < best_loss) best_loss = loss;
      best = j;
    }
  }
  return best;
}

}  // namespace internal

double evaluate(const PlacementProblem& problem, const CachingVector& placement) {
  placement.require_feasible(problem.coding, problem.num_files());
  return internal::weighted_sum(problem.popularity, internal::objective_table(problem),
                                placement);
}

double greedy_update_bound(int n, int num_files, int cache_files) {
  const double by_candidates = static_cast<double>(n - 1) * (num_files - cache_files);
  double by_packets = 0.0;
  for (int i = 1; i <= n - 1; ++i) {
    by_packets += static_cast<double>(n) * cache_files / (i + 1);
  }
  return std::fmin(by_candidates, by_packets);
}

PlacementSolution solve_mpc(const PlacementProblem& problem) {
  const int files = problem.num_files();
  PlacementSolution solution;
  solution.placement = CachingVector::most_popular(
      files, problem.n(), std::min(problem.cache_files(), files));
  solution.objective_value = evaluate(problem, solution.placement);
  solution.method = Method::kMpc;
  return solution;
}

}  // namespace sicache
