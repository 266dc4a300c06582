#include "internal.h"
#include "sicache/errors.h"
#include "sicache/mckp.h"
#include "sicache/optimizer.h"

namespace sicache {
namespace {

// Fractions of a split class within this distance count as an even split.
constexpr double kSplitTieTolerance = 1e-9;

}  // namespace

PlacementSolution solve_aer_heuristic(const PlacementProblem& problem) {
  if (problem.objective != Objective::kAer) {
    throw DomainError("heuristic placement optimizes AER only");
  }
  const int files = problem.num_files();
  const int n = problem.n();
  const PopularityProfile& p = problem.popularity;
  const std::vector<double> rates = internal::objective_table(problem);
  const McKpLpSolution relaxed = solve_linear_relaxation(
      McKpInstance::for_ergodic_rate(p, rates, n, problem.cache_files()));

  PlacementSolution solution;
  solution.method = Method::kHeuristicAer;
  std::vector<int> packets(files, 0);
  for (int j = 0; j < files; ++j) {
    // Largest fraction wins; an even split keeps the heavier item, leaving
    // the repair step to discard from the cheapest file.
    const auto& x = relaxed.fractions[j];
    int best = 0;
    for (int k = 1; k <= n; ++k) {
      if (x[k] > 0.0 && x[k] >= x[best] - kSplitTieTolerance) best = k;
    }
    packets[j] = best;
  }
  solution.placement = CachingVector(std::move(packets));
  CachingVector& m = solution.placement;

  const long capacity = problem.coding.capacity_packets();
  long total = m.total_packets();
  while (total > capacity) {
    const int j = internal::cheapest_removal(p, rates, m, files);
    if (j < 0) throw InfeasibleError("no packet left to discard");
    --m[j];
    --total;
    ++solution.updates;
  }
  while (total < capacity) {
    int best = -1;
    double best_gain = 0.0;
    for (int j = 0; j < files; ++j) {
      if (m[j] == n) continue;
      const double gain = p[j] * (rates[m[j] + 1] - rates[m[j]]);
      if (best < 0 || gain > best_gain + kObjectiveTieTolerance) {
        best = j;
        best_gain = gain;
      }
    }
    if (best < 0 || rates[m[best] + 1] - rates[m[best]] < 0.0) break;
    ++m[best];
    ++total;
    ++solution.updates;
  }
  solution.objective_value = internal::weighted_sum(p, rates, m);
  return solution;
}

}  // namespace sicache
