#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

#include "internal.h"
#include "sicache/simulator.h"

namespace sicache {
namespace {

// Fills the SIRs of trials [begin, end) and returns the redraw count.
long simulate_range(const SimConfig& cfg, long begin, long end, double* out) {
  const int layers = cfg.max_layers;
  const double exponent = -cfg.alpha / 2;
  long redraws = 0;
  std::vector<double> power(layers);
  for (long trial = begin; trial < end; ++trial) {
    int trial_redraws = 0;
    const std::vector<internal::Sbs> sbs = internal::draw_layout(cfg, trial, &trial_redraws);
    redraws += trial_redraws;
    double interference = 0.0;
    for (std::size_t i = layers; i < sbs.size(); ++i) {
      interference += sbs[i].fading * std::pow(sbs[i].distance_sq, exponent);
    }
    double* sir = out + (trial - begin) * layers;
    for (int k = layers; k >= 1; --k) {
      const double p = sbs[k - 1].fading * std::pow(sbs[k - 1].distance_sq, exponent);
      sir[k - 1] = interference > 0.0 ? p / interference
                                      : std::numeric_limits<double>::infinity();
      interference += p;
    }
  }
  return redraws;
}

}  // namespace

SicEnsemble SicEnsemble::simulate(const SimConfig& cfg, int workers) {
  cfg.validate();
  SicEnsemble ensemble;
  ensemble.config_ = cfg;
  ensemble.sirs_.resize(static_cast<std::size_t>(cfg.trials) * cfg.max_layers);
  workers = static_cast<int>(std::clamp<long>(workers, 1, cfg.trials));
  std::vector<long> redraws(workers, 0);
  auto work = [&](int w) {
    const long begin = cfg.trials * w / workers;
    const long end = cfg.trials * (w + 1) / workers;
    redraws[w] = simulate_range(
        cfg, begin, end,
        ensemble.sirs_.data() + static_cast<std::size_t>(begin) * cfg.max_layers);
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }
  for (long r : redraws) ensemble.redraws_ += r;
  return ensemble;
}

SicTrialOutcome SicEnsemble::outcome(long trial, double tau, int layers) const {
  SicTrialOutcome result;
  result.min_sir = std::numeric_limits<double>::infinity();
  bool chain_intact = true;
  for (int k = 1; k <= layers; ++k) {
    const double s = sir(trial, k);
    result.min_sir = std::min(result.min_sir, s);
    if (chain_intact && s >= tau) {
      ++result.layers_decoded;
    } else {
      chain_intact = false;
    }
  }
  return result;
}

}  // namespace sicache
