#include <string>

#include "internal.h"
#include "sicache/errors.h"
#include "sicache/optimizer.h"

namespace sicache {

PlacementSolution solve_afot_greedy(const PlacementProblem& problem,
                                    const UpdateObserver& observer) {
  const int files = problem.num_files();
  const int n = problem.n();
  const int cache = problem.cache_files();
  if (problem.objective != Objective::kAfot) {
    throw DomainError("greedy placement optimizes AFOT only");
  }
  if (cache >= files) {
    throw InfeasibleError("greedy placement requires M < F (M=" + std::to_string(cache) +
                          ", F=" + std::to_string(files) + ")");
  }
  const DifferenceTable table = difference_table(problem.channel, n);
  const PopularityProfile& p = problem.popularity;

  PlacementSolution solution;
  solution.method = Method::kGreedy;
  CachingVector& m = solution.placement;
  m = CachingVector::most_popular(files, n, cache);

  for (int i = cache; i < files; ++i) {
    bool advance = false;
    while (m[i] < n) {
      const int j = internal::cheapest_removal(p, table.fot_values, m, i);
      if (j < 0) break;
      const double gain = p[i] * table.delta(m[i] + 1);
      const double loss = p[j] * table.delta(m[j]);
      if (gain > loss + kObjectiveTieTolerance) {
        ++m[i];
        --m[j];
        ++solution.updates;
        if (observer) observer(m, internal::weighted_sum(p, table.fot_values, m));
        continue;
      }
      // A candidate that could not take even one packet means no less popular
      // file can either: its first-packet gain is no larger.
      advance = m[i] > 0;
      break;
    }
    if (m[i] == 0 && !advance) break;
  }
  solution.objective_value = internal::weighted_sum(p, table.fot_values, m);
  return solution;
}

}  // namespace sicache
