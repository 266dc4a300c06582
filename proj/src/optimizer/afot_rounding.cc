#include <algorithm>
#include <cmath>

#include "internal.h"
#include "sicache/errors.h"
#include "sicache/optimizer.h"

namespace sicache {

PlacementSolution solve_afot_rounding(const PlacementProblem& problem) {
  if (problem.objective != Objective::kAfot) {
    throw DomainError("rounding placement optimizes AFOT only");
  }
  const int files = problem.num_files();
  const int n = problem.n();
  const ContinuousSolution relaxed = solve_afot_continuous(problem);
  const std::vector<double> table = internal::objective_table(problem);

  PlacementSolution solution;
  solution.method = Method::kRounding;
  std::vector<int> packets(files);
  for (int j = 0; j < files; ++j) {
    // The slack absorbs round-off in x_j so that exact multiples of 1/n
    // are not pushed up by one packet.
    const int up = static_cast<int>(std::ceil(n * relaxed.allocation.fractions[j] - 1e-9));
    packets[j] = std::clamp(up, 0, n);
  }
  solution.placement = CachingVector(std::move(packets));
  CachingVector& m = solution.placement;

  long excess = m.total_packets() - problem.coding.capacity_packets();
  for (; excess > 0; --excess) {
    const int j = internal::cheapest_removal(problem.popularity, table, m, files);
    if (j < 0) throw InfeasibleError("rounding left no packet to discard");
    --m[j];
    ++solution.updates;
  }
  solution.objective_value = internal::weighted_sum(problem.popularity, table, m);
  return solution;
}

}  // namespace sicache
