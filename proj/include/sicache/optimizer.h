#ifndef SICACHE_OPTIMIZER_H_
#define SICACHE_OPTIMIZER_H_

#include <functional>
#include <string_view>
#include <vector>

#include "sicache/analytics.h"
#include "sicache/model.h"

namespace sicache {

enum class Objective { kAfot, kAer };

enum class Method {
  kGreedy,        // optimal greedy exchange for AFOT
  kContinuous,    // n -> infinity relaxation (upper bound)
  kRounding,      // relaxation rounding plus discard
  kHeuristicAer,  // linear MCKP relaxation plus repair
  kExhaustive,
  kMpc,
};

std::string_view to_string(Objective objective);
std::string_view to_string(Method method);

// One cache placement instance. For Objective::kAer only channel.alpha() is
// used; the rate integral substitutes its own threshold.
struct PlacementProblem {
  ChannelModel channel;
  CodingConfig coding;
  PopularityProfile popularity;
  Objective objective = Objective::kAfot;

  int num_files() const { return popularity.num_files(); }
  int n() const { return coding.n; }
  int cache_files() const { return coding.cache_files; }
};

struct PlacementSolution {
  CachingVector placement;
  double objective_value = 0.0;
  int updates = 0;  // caching-vector updates performed by the solver
  Method method = Method::kGreedy;
};

struct ContinuousSolution {
  ContinuousAllocation allocation;
  double objective_value = 0.0;
};

// Objective value of `placement` under the problem's objective. Throws
// InfeasibleError for vectors violating the cache constraint.
double evaluate(const PlacementProblem& problem, const CachingVector& placement);

// Invoked after every caching-vector update with the new vector and its AFOT.
using UpdateObserver = std::function<void(const CachingVector&, double)>;

// Greedy exchange starting from the most-popular placement: each candidate
// file in popularity order takes packets from the stored file with the
// smallest weighted backward difference while that strictly increases AFOT.
// Globally optimal. Requires M < F.
PlacementSolution solve_afot_greedy(const PlacementProblem& problem,
                                    const UpdateObserver& observer = {});

// min{(n-1)(F-M), sum_{i=1}^{n-1} nM/(i+1)}.
double greedy_update_bound(int n, int num_files, int cache_files);

// Exact optimum of the concave piecewise-linear relaxation
// max sum_j p_j L(x_j) s.t. sum_j x_j <= M, 0 <= x_j <= 1.
ContinuousSolution solve_afot_continuous(const PlacementProblem& problem);

// Breakpoints 1/t are generated for t <= max(kContinuousMaxRegion, n); the
// interval below the last breakpoint is linearized through the origin.
inline constexpr int kContinuousMaxRegion = 10000;

// Rounds n x* up and discards the excess packets one at a time, always from
// the file losing the least weighted offloaded traffic.
PlacementSolution solve_afot_rounding(const PlacementProblem& problem);

// AER placement from the linear MCKP relaxation followed by greedy repair.
PlacementSolution solve_aer_heuristic(const PlacementProblem& problem);

// Enumerates every feasible placement and returns the best; equal values
// (within kObjectiveTieTolerance) go to the lexicographically largest vector.
// AFOT enumeration is restricted to non-increasing vectors (more popular
// files never hold fewer packets at the optimum); AER enumerates all vectors.
// Throws InstanceTooLargeError when (n+1)^F exceeds kExhaustiveLimit.
PlacementSolution solve_exhaustive(const PlacementProblem& problem, int workers = 1);

inline constexpr double kExhaustiveLimit = 1e7;
inline constexpr double kObjectiveTieTolerance = 1e-12;

PlacementSolution solve_mpc(const PlacementProblem& problem);

}  // namespace sicache

#endif  // SICACHE_OPTIMIZER_H_
