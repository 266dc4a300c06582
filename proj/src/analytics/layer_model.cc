#include <cmath>
#include <string>

#include "sicache/analytics.h"
#include "sicache/errors.h"

namespace sicache {
namespace {

int ceil_div(int num, int den) { return (num + den - 1) / den; }

}  // namespace

LayerModel::LayerModel(const ChannelModel& channel)
    : LayerModel(channel.alpha(), channel.tau()) {}

LayerModel::LayerModel(double alpha, double tau)
    : q_factor_(sicache::q_factor(alpha, tau)),
      log_q_factor_(std::log(q_factor_)) {}

double LayerModel::layer_success(int k) const {
  if (k < 1) throw DomainError("layer index k must be >= 1");
  return std::exp(-static_cast<double>(k) * log_q_factor_);
}

double LayerModel::log_chain_success(int k) const {
  if (k < 1) throw DomainError("layer index k must be >= 1");
  const double exponent = 0.5 * static_cast<double>(k) * (k + 1);
  return -exponent * log_q_factor_;
}

double LayerModel::chain_success(int k) const {
  return std::exp(log_chain_success(k));
}

double LayerModel::chain_sum(int t) const {
  double sum = 0.0;
  for (int k = 1; k <= t; ++k) {
    const double c = chain_success(k);
    if (c == 0.0) break;  // C_k is decreasing; the rest underflow too
    sum += c;
  }
  return sum;
}

double LayerModel::fot(int n, int m) const {
  if (n < 1) throw DomainError("coding parameter n must be >= 1");
  if (m < 0 || m > n) {
    throw DomainError("fot: m = " + std::to_string(m) + " outside {0.." +
                      std::to_string(n) + "}");
  }
  if (m == 0) return 0.0;
  const int layers = ceil_div(n, m);
  const double x = static_cast<double>(m) / n;
  // 1 - x*ceil(n/m) = (n - m*ceil(n/m))/n exactly in integers.
  const double remainder = static_cast<double>(n - m * layers) / n;
  return x * chain_sum(layers) + remainder * chain_success(layers);
}

double LayerModel::fot_continuous(double x) const {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw DomainError("fot_continuous: x must lie in [0, 1]");
  }
  if (x == 0.0) return 0.0;
  const double layers_real = std::ceil(1.0 / x);
  if (layers_real > 1e9) {
    // Far below every breakpoint the chain sum has converged.
    return x * chain_sum(1 << 20);
  }
  const int layers = static_cast<int>(layers_real);
  return x * chain_sum(layers) + (1.0 - x * layers) * chain_success(layers);
}

double LayerModel::region_slope(int t) const {
  if (t < 1) throw DomainError("region index t must be >= 1");
  return chain_sum(t) - t * chain_success(t);
}

double layer_success_prob(const ChannelModel& channel, int k) {
  return LayerModel(channel).layer_success(k);
}

double chain_success_prob(const ChannelModel& channel, int k) {
  return LayerModel(channel).chain_success(k);
}

double fot(const ChannelModel& channel, int n, int m) {
  return LayerModel(channel).fot(n, m);
}

double fot_continuous(const ChannelModel& channel, double x) {
  return LayerModel(channel).fot_continuous(x);
}

}  // namespace sicache
