#ifndef SICACHE_ANALYTICS_H_
#define SICACHE_ANALYTICS_H_

#include <string>
#include <vector>

#include "sicache/model.h"

namespace sicache {

// Complementary incomplete Beta function B'(a, b, z) = int_z^1 u^(a-1)
// (1-u)^(b-1) du, for a, b > 0 and 0 < z < 1. Relative error <= 1e-10.
double beta_complement(double a, double b, double z);

// Same integral with the lower limit given through its complement 1 - z,
// which keeps full precision when z is within rounding of 1.
double beta_complement_upper(double a, double b, double one_minus_z);

// Q_tau = 1 + (2/alpha) tau^(2/alpha) B'(2/alpha, 1 - 2/alpha, 1/(1+tau)).
// Defined for tau >= 0 (Q_0 = 1); the per-layer success probability is
// Q_tau^-k.
double q_factor(double alpha, double tau);
double q_factor(const ChannelModel& channel);

// Closed-form layer quantities derived from a single Q_tau evaluation.
// Chain probabilities are evaluated in log space so deep layers underflow
// gracefully to zero instead of producing NaN.
class LayerModel {
 public:
  explicit LayerModel(const ChannelModel& channel);
  LayerModel(double alpha, double tau);

  double q_factor() const { return q_factor_; }
  double log_q_factor() const { return log_q_factor_; }

  // q_k = Q^-k.
  double layer_success(int k) const;
  // C_k = Q^-(k(k+1)/2) = prod_{i<=k} q_i.
  double chain_success(int k) const;
  double log_chain_success(int k) const;
  // sum_{k=1}^t C_k.
  double chain_sum(int t) const;

  // L[m] for coding parameter n, m in {0..n}.
  double fot(int n, int m) const;
  // L(x) for x in [0, 1].
  double fot_continuous(double x) const;
  // Slope of L(x) on (1/t, 1/(t-1)): sum_{i<=t} C_i - t C_t, t >= 2.
  double region_slope(int t) const;

 private:
  double q_factor_;
  double log_q_factor_;
};

double layer_success_prob(const ChannelModel& channel, int k);
double chain_success_prob(const ChannelModel& channel, int k);
double fot(const ChannelModel& channel, int n, int m);
double fot_continuous(const ChannelModel& channel, double x);

// Popularity-weighted offloaded traffic sum_j p_j L[m_j]. Throws
// InfeasibleError if the vector violates the cache constraint.
double afot(const ChannelModel& channel, const CodingConfig& coding,
            const PopularityProfile& popularity, const CachingVector& placement);

// Label of one first difference delta(m) = L[m] - L[m-1]. `region` is
// ceil(n/m); `previous_region` is ceil(n/(m-1)), or n when m = 1. Equal
// fields denote a within-region difference d_t, otherwise a boundary
// difference d_{t,t'}.
struct DeltaLabel {
  int region = 0;
  int previous_region = 0;

  bool is_boundary() const { return region != previous_region; }
  std::string to_string() const;  // "d_2", "d_{4,8}"

  friend bool operator==(const DeltaLabel&, const DeltaLabel&) = default;
  friend auto operator<=>(const DeltaLabel&, const DeltaLabel&) = default;
};

// Offloaded traffic difference table for one coding parameter n.
struct DifferenceTable {
  int n = 0;
  std::vector<double> fot_values;   // L[0..n]
  std::vector<double> deltas;       // index m-1 holds delta(m), m = 1..n
  std::vector<DeltaLabel> labels;   // index m-1 holds the label of delta(m)
  int distinct_count = 0;           // N_n

  double delta(int m) const { return deltas[m - 1]; }
  const DeltaLabel& label(int m) const { return labels[m - 1]; }
};

DifferenceTable difference_table(const LayerModel& layers, int n);
DifferenceTable difference_table(const ChannelModel& channel, int n);

// d_t = (1/n)(sum_{k<=t} C_k - t C_t).
double within_region_delta(const LayerModel& layers, int n, int t);

// R[m] = ceil(n/m) * int_0^inf C_ceil(n/m)(2^r - 1) dr in bits/s/Hz.
double ergodic_rate(double alpha, int n, int m);

// int_0^inf C_k(2^r - 1) dr, truncated where the integrand drops below 1e-12.
double chain_rate_integral(double alpha, int k);

// R[0..n] for one (alpha, n); each distinct ceil(n/m) is integrated once.
std::vector<double> ergodic_rate_table(double alpha, int n);

double aer(double alpha, const CodingConfig& coding,
           const PopularityProfile& popularity, const CachingVector& placement);

PopularityProfile zipf_popularity(int num_files, double gamma);

// AFOT of storing the M most popular whole files: q_1 * sum_{j<=M} p_j.
double mpc_afot(const ChannelModel& channel, const PopularityProfile& popularity,
                int cache_files);

// Right-hand side of the MPC degeneracy condition:
// sum_{k=1}^n C_k / (C_1 - C_2).
double mpc_degeneracy_threshold(const ChannelModel& channel, int n);

// p_M / p_{M+1} >= sum_{k=1}^n C_k / (C_1 - C_2). When true the optimal
// AFOT placement is the most-popular-caching vector.
bool mpc_degeneracy_holds(const ChannelModel& channel, int n,
                          const PopularityProfile& popularity, int cache_files);

}  // namespace sicache

#endif  // SICACHE_ANALYTICS_H_
