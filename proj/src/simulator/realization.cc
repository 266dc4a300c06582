#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>

#include "internal.h"
#include "sicache/errors.h"
#include "sicache/simulator.h"

namespace sicache {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Redraw attempts before a layout is declared impossible to sample.
constexpr int kMaxAttempts = 1000;

}  // namespace

void SimConfig::validate() const {
  auto fail = [](const std::string& field, const std::string& why) {
    throw DomainError("simulation." + field + ": " + why);
  };
  if (!(lambda_b > 0.0) || !std::isfinite(lambda_b)) fail("lambda_b", "must be positive");
  if (!(region_side > 0.0) || !std::isfinite(region_side)) {
    fail("region_side", "must be positive");
  }
  if (trials < 1) fail("trials", "must be at least 1");
  if (!(alpha > 2.0)) fail("alpha", "path-loss exponent must exceed 2");
  if (max_layers < 1) fail("max_layers", "must be at least 1");
  if (expected_count() < 50.0 * max_layers) {
    fail("region_side", "expected SBS count " + std::to_string(expected_count()) +
                            " is below 50 * max_layers");
  }
  if (region_side < 40.0 / std::sqrt(lambda_b * std::numbers::pi)) {
    fail("region_side", "must be at least 40 / sqrt(lambda_b * pi)");
  }
}

std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t trial_index,
                         std::uint64_t attempt) {
  std::uint64_t z = splitmix64(master_seed);
  z = splitmix64(z ^ trial_index);
  return splitmix64(z ^ (attempt * 0xd1b54a32d192ed03ULL));
}

namespace internal {

std::vector<Sbs> draw_layout(const SimConfig& cfg, long trial_index, int* redraws) {
  const std::size_t front = static_cast<std::size_t>(cfg.max_layers) + 1;
  const double half = cfg.region_side / 2;
  std::vector<Sbs> sbs;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::mt19937_64 rng(trial_seed(cfg.master_seed, trial_index, attempt));
    std::poisson_distribution<long> count(cfg.expected_count());
    std::uniform_real_distribution<double> coordinate(-half, half);
    std::exponential_distribution<double> fading(1.0);
    const long size = count(rng);
    sbs.resize(size);
    for (Sbs& s : sbs) {
      const double x = coordinate(rng);
      const double y = coordinate(rng);
      s.distance_sq = x * x + y * y;
      s.fading = fading(rng);
    }
    bool degenerate = sbs.size() < front;
    if (!degenerate) {
      auto closer = [](const Sbs& a, const Sbs& b) { return a.distance_sq < b.distance_sq; };
      std::nth_element(sbs.begin(), sbs.begin() + (front - 1), sbs.end(), closer);
      std::sort(sbs.begin(), sbs.begin() + front, closer);
      degenerate = sbs[0].distance_sq <= 0.0 || sbs[0].fading <= 0.0;
      for (std::size_t i = 1; i < front && !degenerate; ++i) {
        degenerate = sbs[i].distance_sq == sbs[i - 1].distance_sq || sbs[i].fading <= 0.0;
      }
    }
    if (!degenerate) return sbs;
    if (redraws) ++*redraws;
  }
  throw DomainError("simulation: could not sample a layout with " + std::to_string(front) +
                    " SBSs; increase lambda_b or region_side");
}

}  // namespace internal

NetworkRealization sample_realization(const SimConfig& cfg, long trial_index) {
  if (trial_index < 0 || trial_index >= cfg.trials) {
    throw std::out_of_range("trial index " + std::to_string(trial_index) +
                            " outside [0, trials)");
  }
  NetworkRealization realization;
  realization.alpha = cfg.alpha;
  std::vector<internal::Sbs> sbs = internal::draw_layout(cfg, trial_index, &realization.redraws);
  std::sort(sbs.begin() + cfg.max_layers + 1, sbs.end(),
            [](const internal::Sbs& a, const internal::Sbs& b) {
              return a.distance_sq < b.distance_sq;
            });
  realization.distances.reserve(sbs.size());
  realization.fading_powers.reserve(sbs.size());
  for (const auto& s : sbs) {
    realization.distances.push_back(std::sqrt(s.distance_sq));
    realization.fading_powers.push_back(s.fading);
  }
  return realization;
}

double NetworkRealization::received_power(int i) const {
  return fading_powers[i] * std::pow(distances[i], -alpha);
}

double layer_sir(const NetworkRealization& realization, int k) {
  double interference = 0.0;
  for (int i = realization.size() - 1; i >= k; --i) {
    interference += realization.received_power(i);
  }
  if (interference <= 0.0) return std::numeric_limits<double>::infinity();
  return realization.received_power(k - 1) / interference;
}

SicTrialOutcome sic_trial(const NetworkRealization& realization, double tau, int layers) {
  if (layers < 1 || layers > realization.size()) {
    throw std::out_of_range("layer count " + std::to_string(layers) +
                            " outside the realization");
  }
  std::vector<double> sirs(layers);
  double interference = 0.0;
  for (int i = realization.size() - 1; i >= layers; --i) {
    interference += realization.received_power(i);
  }
  for (int k = layers; k >= 1; --k) {
    const double power = realization.received_power(k - 1);
    sirs[k - 1] = interference > 0.0 ? power / interference
                                     : std::numeric_limits<double>::infinity();
    interference += power;
  }
  SicTrialOutcome outcome;
  outcome.min_sir = *std::min_element(sirs.begin(), sirs.end());
  while (outcome.layers_decoded < layers && sirs[outcome.layers_decoded] >= tau) {
    ++outcome.layers_decoded;
  }
  return outcome;
}

}  // namespace sicache
