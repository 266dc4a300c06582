#include <algorithm>
#include <queue>
#include <vector>

#include "sicache/optimizer.h"

namespace sicache {
namespace {

struct Segment {
  double length;
  double slope;
};

// Linear pieces of L(x) ordered by increasing x. Pieces with equal slopes
// (deep regions where C_t has underflowed) are merged.
std::vector<Segment> fot_segments(const LayerModel& layers, int max_region) {
  std::vector<double> chain_sums(max_region + 1, 0.0);
  std::vector<double> chains(max_region + 1, 0.0);
  for (int t = 1; t <= max_region; ++t) {
    chains[t] = layers.chain_success(t);
    chain_sums[t] = chain_sums[t - 1] + chains[t];
  }
  std::vector<Segment> segments;
  auto push = [&segments](double length, double slope) {
    if (!segments.empty() && segments.back().slope == slope) {
      segments.back().length += length;
    } else {
      segments.push_back({length, slope});
    }
  };
  // Chord from the origin to L(1/T) = S_T / T.
  push(1.0 / max_region, chain_sums[max_region]);
  for (int t = max_region; t >= 2; --t) {
    push(1.0 / (t - 1) - 1.0 / t, chain_sums[t] - t * chains[t]);
  }
  return segments;
}

}  // namespace

ContinuousSolution solve_afot_continuous(const PlacementProblem& problem) {
  const int files = problem.num_files();
  const int cache = problem.cache_files();
  ContinuousSolution solution;
  solution.allocation.fractions.assign(files, 0.0);
  const LayerModel layers(problem.channel);
  const PopularityProfile& p = problem.popularity;
  if (cache >= files) {
    std::fill(solution.allocation.fractions.begin(), solution.allocation.fractions.end(),
              1.0);
    for (int j = 0; j < files; ++j) solution.objective_value += p[j] * layers.fot_continuous(1.0);
    return solution;
  }

  const std::vector<Segment> segments =
      fot_segments(layers, std::max(kContinuousMaxRegion, problem.n()));
  // Max-heap on weighted slope; equal values go to the more popular file.
  struct Head {
    double value;
    int file;
    std::size_t segment;
  };
  auto lower = [](const Head& a, const Head& b) {
    if (a.value != b.value) return a.value < b.value;
    return a.file > b.file;
  };
  std::priority_queue<Head, std::vector<Head>, decltype(lower)> heap(lower);
  for (int j = 0; j < files; ++j) heap.push({p[j] * segments[0].slope, j, 0});

  double remaining = cache;
  while (remaining > 0.0 && !heap.empty()) {
    const Head head = heap.top();
    heap.pop();
    const Segment& segment = segments[head.segment];
    const double take = std::min(segment.length, remaining);
    solution.allocation.fractions[head.file] += take;
    solution.objective_value += take * head.value;
    remaining -= take;
    if (take == segment.length && head.segment + 1 < segments.size()) {
      const std::size_t next = head.segment + 1;
      heap.push({p[head.file] * segments[next].slope, head.file, next});
    }
  }
  for (double& x : solution.allocation.fractions) x = std::min(x, 1.0);
  return solution;
}

}  // namespace sicache
