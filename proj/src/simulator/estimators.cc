#include <cmath>
#include <string>

#include "sicache/errors.h"
#include "sicache/simulator.h"

namespace sicache {
namespace {

void require_layers(const SicEnsemble& ensemble, int layers) {
  if (layers < 1 || layers > ensemble.max_layers()) {
    throw DomainError("layer count " + std::to_string(layers) + " outside [1, " +
                      std::to_string(ensemble.max_layers()) + "]");
  }
}

int regions_for(const SicEnsemble& ensemble, int n, int m) {
  if (n < 1 || m < 1 || m > n) {
    throw DomainError("need 1 <= m <= n (n=" + std::to_string(n) +
                      ", m=" + std::to_string(m) + ")");
  }
  const int k = (n + m - 1) / m;
  require_layers(ensemble, k);
  return k;
}

// Sample mean and its standard error; two passes in trial order.
template <typename Sample>
Estimate sample_mean(long trials, Sample sample) {
  Estimate estimate;
  estimate.samples = trials;
  double sum = 0.0;
  for (long t = 0; t < trials; ++t) sum += sample(t);
  estimate.value = sum / trials;
  if (trials > 1) {
    double squares = 0.0;
    for (long t = 0; t < trials; ++t) {
      const double d = sample(t) - estimate.value;
      squares += d * d;
    }
    estimate.std_error = std::sqrt(squares / (trials - 1) / trials);
  }
  return estimate;
}

}  // namespace

double LayerSuccessEstimate::chain(int k) const {
  return static_cast<double>(reached[k]) / reached[0];
}

LayerSuccessEstimate estimate_layer_success(const SicEnsemble& ensemble, double tau,
                                            int layers) {
  require_layers(ensemble, layers);
  LayerSuccessEstimate estimate;
  estimate.reached.assign(layers + 1, 0);
  for (long t = 0; t < ensemble.trials(); ++t) {
    const int decoded = ensemble.outcome(t, tau, layers).layers_decoded;
    for (int k = 0; k <= decoded; ++k) ++estimate.reached[k];
  }
  for (int k = 1; k <= layers; ++k) {
    const long trials = estimate.reached[k - 1];
    if (trials == 0) {
      estimate.conditional.emplace_back();
      ++estimate.undefined;
      continue;
    }
    Estimate q;
    q.samples = trials;
    q.value = static_cast<double>(estimate.reached[k]) / trials;
    q.std_error = std::sqrt(q.value * (1.0 - q.value) / trials);
    estimate.conditional.emplace_back(q);
  }
  return estimate;
}

LayerSuccessEstimate estimate_layer_success(const SimConfig& cfg, double tau, int layers,
                                            int workers) {
  return estimate_layer_success(SicEnsemble::simulate(cfg, workers), tau, layers);
}

Estimate estimate_fot(const SicEnsemble& ensemble, double tau, int n, int m) {
  const int k = regions_for(ensemble, n, m);
  const double per_layer = static_cast<double>(m) / n;
  return sample_mean(ensemble.trials(), [&](long t) {
    const int decoded = ensemble.outcome(t, tau, k).layers_decoded;
    return decoded >= k ? 1.0 : decoded * per_layer;
  });
}

Estimate estimate_fot(const SimConfig& cfg, double tau, int n, int m, int workers) {
  return estimate_fot(SicEnsemble::simulate(cfg, workers), tau, n, m);
}

Estimate estimate_ergodic_rate(const SicEnsemble& ensemble, int n, int m) {
  const int k = regions_for(ensemble, n, m);
  return sample_mean(ensemble.trials(), [&](long t) {
    double min_sir = kMaxRateSir;
    for (int layer = 1; layer <= k; ++layer) min_sir = std::fmin(min_sir, ensemble.sir(t, layer));
    return k * std::log2(1.0 + min_sir);
  });
}

Estimate estimate_ergodic_rate(const SimConfig& cfg, int n, int m, int workers) {
  return estimate_ergodic_rate(SicEnsemble::simulate(cfg, workers), n, m);
}

}  // namespace sicache
