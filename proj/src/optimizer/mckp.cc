#include "sicache/mckp.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "sicache/errors.h"

namespace sicache {

McKpInstance McKpInstance::for_ergodic_rate(const PopularityProfile& popularity,
                                            const std::vector<double>& rates, int n,
                                            int cache_files) {
  if (static_cast<int>(rates.size()) != n + 1) {
    throw std::invalid_argument("rate table must hold R[0..n]");
  }
  McKpInstance instance;
  instance.capacity = cache_files;
  for (int j = 0; j < popularity.num_files(); ++j) {
    std::vector<double> profits(n + 1);
    std::vector<double> weights(n + 1);
    for (int k = 0; k <= n; ++k) {
      profits[k] = popularity[j] * rates[k];
      weights[k] = static_cast<double>(k) / n;
    }
    instance.profits.push_back(std::move(profits));
    instance.weights.push_back(std::move(weights));
  }
  return instance;
}

namespace {

// Items of one class surviving dominance and LP-dominance, by weight.
std::vector<int> hull_items(const std::vector<double>& profits,
                            const std::vector<double>& weights) {
  std::vector<int> order(profits.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (weights[a] != weights[b]) return weights[a] < weights[b];
    return profits[a] > profits[b];
  });
  std::vector<int> undominated;
  for (int k : order) {
    if (!undominated.empty() && profits[k] <= profits[undominated.back()]) continue;
    undominated.push_back(k);
  }
  std::vector<int> hull;
  for (int k : undominated) {
    while (hull.size() >= 2) {
      const int a = hull[hull.size() - 2];
      const int b = hull.back();
      // Drop b when it lies on or below the chord from a to k.
      const double lhs = (profits[b] - profits[a]) * (weights[k] - weights[a]);
      const double rhs = (profits[k] - profits[a]) * (weights[b] - weights[a]);
      if (lhs > rhs) break;
      hull.pop_back();
    }
    hull.push_back(k);
  }
  return hull;
}

struct Increment {
  int cls;
  int from;
  int to;
  double weight;
  double profit;
  double efficiency;
};

}  // namespace

McKpLpSolution solve_linear_relaxation(const McKpInstance& instance) {
  const int classes = instance.num_classes();
  if (static_cast<int>(instance.weights.size()) != classes) {
    throw std::invalid_argument("profit and weight tables differ in class count");
  }
  McKpLpSolution solution;
  solution.fractions.resize(classes);
  std::vector<Increment> increments;
  for (int c = 0; c < classes; ++c) {
    const auto& profits = instance.profits[c];
    const auto& weights = instance.weights[c];
    if (profits.empty() || profits.size() != weights.size()) {
      throw std::invalid_argument("class " + std::to_string(c) + " is malformed");
    }
    solution.fractions[c].assign(profits.size(), 0.0);
    const std::vector<int> hull = hull_items(profits, weights);
    solution.fractions[c][hull[0]] = 1.0;
    solution.value += profits[hull[0]];
    solution.weight += weights[hull[0]];
    for (std::size_t h = 1; h < hull.size(); ++h) {
      const int a = hull[h - 1];
      const int b = hull[h];
      const double dw = weights[b] - weights[a];
      const double dp = profits[b] - profits[a];
      increments.push_back({c, a, b, dw, dp, dp / dw});
    }
  }
  if (solution.weight > instance.capacity) {
    throw InfeasibleError("lightest items exceed the knapsack capacity");
  }
  std::stable_sort(increments.begin(), increments.end(),
                   [](const Increment& a, const Increment& b) {
                     return a.efficiency > b.efficiency;
                   });
  double remaining = instance.capacity - solution.weight;
  for (const Increment& inc : increments) {
    if (remaining <= 0.0) break;
    auto& x = solution.fractions[inc.cls];
    if (inc.weight <= remaining) {
      x[inc.from] = 0.0;
      x[inc.to] = 1.0;
      solution.value += inc.profit;
      solution.weight += inc.weight;
      remaining -= inc.weight;
      continue;
    }
    const double fraction = remaining / inc.weight;
    x[inc.from] = 1.0 - fraction;
    x[inc.to] = fraction;
    solution.value += fraction * inc.profit;
    solution.weight += remaining;
    solution.split_class = inc.cls;
    break;
  }
  return solution;
}

}  // namespace sicache
