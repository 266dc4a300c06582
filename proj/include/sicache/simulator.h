#ifndef SICACHE_SIMULATOR_H_
#define SICACHE_SIMULATOR_H_

#include <cstdint>
#include <optional>
#include <vector>

namespace sicache {

// Monte Carlo setup: SBSs form a homogeneous Poisson process on a square
// centered at the typical user.
struct SimConfig {
  double lambda_b = 100.0;     // SBS density per km^2
  double region_side = 4.0;    // km
  long trials = 100000;
  std::uint64_t master_seed = 1;
  double alpha = 4.0;
  int max_layers = 16;         // deepest SIC layer evaluated

  double area() const { return region_side * region_side; }
  double expected_count() const { return lambda_b * area(); }

  // Throws DomainError naming the offending field. Besides positivity the
  // region must hold at least 50 * max_layers SBSs on average and its side
  // must be at least 40 / sqrt(lambda_b pi) to keep edge effects negligible.
  void validate() const;
};

// Distances from the typical user to every SBS (ascending, km) with the
// matching unit-mean exponential fading powers.
struct NetworkRealization {
  double alpha = 4.0;
  std::vector<double> distances;
  std::vector<double> fading_powers;
  int redraws = 0;  // degenerate layouts discarded before this one

  int size() const { return static_cast<int>(distances.size()); }
  double received_power(int i) const;  // |h_i|^2 r_i^-alpha, 0-based
};

// Per-trial RNG seed derived from (master_seed, trial_index, attempt) by a
// splitmix64 chain.
std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t trial_index,
                         std::uint64_t attempt);

// Fully determined by (cfg.master_seed, trial_index). Layouts with fewer than
// max_layers + 1 SBSs, or with coincident distances, are redrawn.
NetworkRealization sample_realization(const SimConfig& cfg, long trial_index);

struct SicTrialOutcome {
  int layers_decoded = 0;  // consecutive successes from layer 1
  double min_sir = 0.0;    // minimum SIR over layers 1..K
};

// SIR of layer k (1-based) against every farther SBS; +inf when none remain.
double layer_sir(const NetworkRealization& realization, int k);

// Ordered SIC: layer k decodes iff layers 1..k-1 did and SIR_k >= tau.
SicTrialOutcome sic_trial(const NetworkRealization& realization, double tau, int layers);

// Rate computations cap SIR here so an empty interferer set stays finite.
inline constexpr double kMaxRateSir = 1e12;

// Per-layer SIRs of every trial. Independent of tau, so one ensemble serves
// all thresholds and coding parameters up to max_layers.
class SicEnsemble {
 public:
  // Trials are split across `workers` threads; the stored SIRs, and every
  // estimate derived from them, do not depend on the worker count.
  static SicEnsemble simulate(const SimConfig& cfg, int workers = 1);

  const SimConfig& config() const { return config_; }
  long trials() const { return config_.trials; }
  int max_layers() const { return config_.max_layers; }
  long redraws() const { return redraws_; }

  double sir(long trial, int k) const {
    return sirs_[static_cast<std::size_t>(trial) * config_.max_layers + (k - 1)];
  }
  SicTrialOutcome outcome(long trial, double tau, int layers) const;

 private:
  SimConfig config_;
  std::vector<double> sirs_;  // trial-major, layers 1..max_layers
  long redraws_ = 0;
};

struct Estimate {
  double value = 0.0;
  double std_error = 0.0;
  long samples = 0;
};

struct LayerSuccessEstimate {
  // reached[k] = trials decoding at least k layers, k = 0..K.
  std::vector<long> reached;
  // conditional[k-1] = reached[k] / reached[k-1], with binomial standard
  // error; empty when no trial reached layer k-1.
  std::vector<std::optional<Estimate>> conditional;
  long undefined = 0;

  // Unconditional success of layers 1..k: reached[k] / trials.
  double chain(int k) const;
};

LayerSuccessEstimate estimate_layer_success(const SicEnsemble& ensemble, double tau,
                                            int layers);
LayerSuccessEstimate estimate_layer_success(const SimConfig& cfg, double tau, int layers,
                                            int workers = 1);

// Mean of 1 when ceil(n/m) layers decode, otherwise layers_decoded * m / n.
Estimate estimate_fot(const SicEnsemble& ensemble, double tau, int n, int m);
Estimate estimate_fot(const SimConfig& cfg, double tau, int n, int m, int workers = 1);

// Mean of K log2(1 + min_sir) with K = ceil(n/m).
Estimate estimate_ergodic_rate(const SicEnsemble& ensemble, int n, int m);
Estimate estimate_ergodic_rate(const SimConfig& cfg, int n, int m, int workers = 1);

}  // namespace sicache

#endif  // SICACHE_SIMULATOR_H_
