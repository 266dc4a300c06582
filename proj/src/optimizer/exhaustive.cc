#include <algorithm>
#include <cmath>
#include <string>
#include <thread>
#include <vector>

#include "internal.h"
#include "sicache/errors.h"
#include "sicache/optimizer.h"

namespace sicache {
namespace {

struct Best {
  std::vector<int> packets;
  double value = 0.0;
  bool found = false;

  // Strictly better beyond the tie tolerance, or tied and lexicographically
  // larger.
  void offer(const std::vector<int>& candidate, double candidate_value) {
    if (!found || candidate_value > value + kObjectiveTieTolerance ||
        (candidate_value >= value - kObjectiveTieTolerance && candidate > packets)) {
      packets = candidate;
      value = candidate_value;
      found = true;
    }
  }
};

class Enumerator {
 public:
  Enumerator(const PopularityProfile& popularity, const std::vector<double>& table,
             int n, long capacity, bool non_increasing)
      : p_(popularity),
        table_(table),
        n_(n),
        capacity_(capacity),
        non_increasing_(non_increasing),
        current_(popularity.num_files(), 0) {}

  // Enumerates all vectors with m_1 = first.
  Best run(int first) {
    best_ = Best();
    if (first <= capacity_) {
      current_[0] = first;
      visit(1, capacity_ - first, p_[0] * table_[first]);
    }
    return best_;
  }

 private:
  void visit(int j, long remaining, double partial) {
    const int files = static_cast<int>(current_.size());
    if (j == files) {
      best_.offer(current_, partial);
      return;
    }
    int top = static_cast<int>(std::min<long>(n_, remaining));
    if (non_increasing_) top = std::min(top, current_[j - 1]);
    // Descending so that among equal values the lexicographically largest
    // vector is met first.
    for (int m = top; m >= 0; --m) {
      current_[j] = m;
      visit(j + 1, remaining - m, partial + p_[j] * table_[m]);
    }
    current_[j] = 0;
  }

  const PopularityProfile& p_;
  const std::vector<double>& table_;
  int n_;
  long capacity_;
  bool non_increasing_;
  std::vector<int> current_;
  Best best_;
};

}  // namespace

PlacementSolution solve_exhaustive(const PlacementProblem& problem, int workers) {
  const int files = problem.num_files();
  const int n = problem.n();
  const double size = std::pow(static_cast<double>(n + 1), files);
  if (size > kExhaustiveLimit) {
    throw InstanceTooLargeError("exhaustive search over (n+1)^F = " +
                                std::to_string(size) + " vectors exceeds the limit");
  }
  const std::vector<double> table = internal::objective_table(problem);
  const long capacity = problem.coding.capacity_packets();
  const bool non_increasing = problem.objective == Objective::kAfot;

  // Partition on m_1; each worker handles a fixed stride of first values.
  const int first_values = n + 1;
  workers = std::clamp(workers, 1, first_values);
  std::vector<Best> partial(first_values);
  auto work = [&](int worker) {
    Enumerator enumerator(problem.popularity, table, n, capacity, non_increasing);
    for (int first = worker; first < first_values; first += workers) {
      partial[first] = enumerator.run(first);
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) threads.emplace_back(work, w);
    for (auto& thread : threads) thread.join();
  }
  Best best;
  for (int first = n; first >= 0; --first) {
    if (partial[first].found) best.offer(partial[first].packets, partial[first].value);
  }
  if (!best.found) throw InfeasibleError("no feasible placement");

  PlacementSolution solution;
  solution.method = Method::kExhaustive;
  solution.placement = CachingVector(best.packets);
  solution.objective_value = best.value;
  return solution;
}

}  // namespace sicache
