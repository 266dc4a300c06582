#include <cassert>
#include <cmath>

#include "sicache/analytics.h"
#include "sicache/errors.h"

namespace sicache {

double afot(const ChannelModel& channel, const CodingConfig& coding,
            const PopularityProfile& popularity, const CachingVector& placement) {
  placement.require_feasible(coding, popularity.num_files());
  const DifferenceTable table = difference_table(channel, coding.n);
  double total = 0.0;
  for (int j = 0; j < popularity.num_files(); ++j) {
    total += popularity[j] * table.fot_values[placement[j]];
  }
  return total;
}

double aer(double alpha, const CodingConfig& coding,
           const PopularityProfile& popularity, const CachingVector& placement) {
  placement.require_feasible(coding, popularity.num_files());
  const std::vector<double> rates = ergodic_rate_table(alpha, coding.n);
  double total = 0.0;
  for (int j = 0; j < popularity.num_files(); ++j) {
    total += popularity[j] * rates[placement[j]];
  }
  return total;
}

PopularityProfile zipf_popularity(int num_files, double gamma) {
  return PopularityProfile::zipf(num_files, gamma);
}

double mpc_afot(const ChannelModel& channel, const PopularityProfile& popularity,
                int cache_files) {
  if (cache_files < 1) throw DomainError("mpc_afot: M must be >= 1");
  return LayerModel(channel).layer_success(1) * popularity.head_mass(cache_files);
}

double mpc_degeneracy_threshold(const ChannelModel& channel, int n) {
  if (n < 2) throw DomainError("mpc degeneracy condition requires n >= 2");
  const LayerModel layers(channel);
  const double gap = layers.chain_success(1) - layers.chain_success(2);
  // C_k strictly decreasing for tau > 0.
  assert(gap > 0.0);
  return layers.chain_sum(n) / gap;
}

bool mpc_degeneracy_holds(const ChannelModel& channel, int n,
                          const PopularityProfile& popularity, int cache_files) {
  if (cache_files < 1 || cache_files >= popularity.num_files()) {
    throw DomainError("mpc degeneracy condition requires 1 <= M < F");
  }
  const double threshold = mpc_degeneracy_threshold(channel, n);
  const double p_m = popularity[cache_files - 1];
  const double p_next = popularity[cache_files];
  // p_M / p_{M+1} >= threshold, with p_{M+1} = 0 counting as an infinite ratio.
  return p_m >= threshold * p_next;
}

}  // namespace sicache
