#ifndef SICACHE_SRC_OPTIMIZER_INTERNAL_H_
#define SICACHE_SRC_OPTIMIZER_INTERNAL_H_

#include <vector>

#include "sicache/optimizer.h"

namespace sicache::internal {

// Per-file objective value for m = 0..n packets: L[m] or R[m].
std::vector<double> objective_table(const PlacementProblem& problem);

double weighted_sum(const PopularityProfile& popularity,
                    const std::vector<double>& table, const CachingVector& placement);

// Index j with m_j > 0 minimizing p_j (table[m_j] - table[m_j - 1]) over
// j < limit; near-ties (kObjectiveTieTolerance) go to the largest index.
// Returns -1 when no such file exists.
int cheapest_removal(const PopularityProfile& popularity,
                     const std::vector<double>& table, const CachingVector& placement,
                     int limit);

}  // namespace sicache::internal

#endif  // SICACHE_SRC_OPTIMIZER_INTERNAL_H_
