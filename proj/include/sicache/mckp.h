#ifndef SICACHE_MCKP_H_
#define SICACHE_MCKP_H_

#include <vector>

#include "sicache/model.h"

namespace sicache {

// Multiple-choice knapsack: pick exactly one item per class subject to a
// total weight budget.
struct McKpInstance {
  std::vector<std::vector<double>> profits;  // [class][item]
  std::vector<std::vector<double>> weights;  // [class][item]
  double capacity = 0.0;

  int num_classes() const { return static_cast<int>(profits.size()); }

  // Class j = file j, item k = k packets: profit p_j R[k], weight k/n.
  static McKpInstance for_ergodic_rate(const PopularityProfile& popularity,
                                       const std::vector<double>& rates, int n,
                                       int cache_files);
};

// Optimum of the linear relaxation (0 <= x_jk <= 1, sum_k x_jk = 1). At most
// one class is split between two items.
struct McKpLpSolution {
  std::vector<std::vector<double>> fractions;  // [class][item]
  double value = 0.0;
  double weight = 0.0;
  int split_class = -1;
};

// Dominance and convex-hull reduction per class, then fill by decreasing
// incremental efficiency. Throws InfeasibleError when even the lightest item
// of every class exceeds the capacity.
McKpLpSolution solve_linear_relaxation(const McKpInstance& instance);

}  // namespace sicache

#endif  // SICACHE_MCKP_H_
