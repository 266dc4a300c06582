#include "sicache/model.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "sicache/errors.h"

namespace sicache {

ChannelModel::ChannelModel(double alpha, double tau) : alpha_(alpha), tau_(tau) {
  if (!(alpha > 2.0) || !std::isfinite(alpha)) {
    throw DomainError("pathloss exponent alpha must be finite and > 2");
  }
  if (!(tau > 0.0) || !std::isfinite(tau)) {
    throw DomainError("SIR threshold tau must be finite and > 0");
  }
}

PopularityProfile::PopularityProfile(std::vector<double> probs)
    : probs_(std::move(probs)) {
  if (probs_.empty()) throw DomainError("popularity profile is empty");
  double total = 0.0;
  for (std::size_t j = 0; j < probs_.size(); ++j) {
    const double p = probs_[j];
    if (!(p >= 0.0 && p <= 1.0)) {
      throw DomainError("popularity entry " + std::to_string(j + 1) +
                        " outside [0, 1]");
    }
    if (j > 0 && p > probs_[j - 1]) {
      throw DomainError("popularity must be non-increasing (entry " +
                        std::to_string(j + 1) + ")");
    }
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw DomainError("popularity entries must sum to 1");
  }
}

PopularityProfile PopularityProfile::zipf(int num_files, double gamma) {
  if (num_files < 1) throw DomainError("zipf: number of files must be >= 1");
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) {
    throw DomainError("zipf: gamma must be finite and >= 0");
  }
  std::vector<double> weights(num_files);
  for (int j = 0; j < num_files; ++j) {
    weights[j] = std::pow(static_cast<double>(j + 1), -gamma);
  }
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  for (double& w : weights) w /= total;
  return PopularityProfile(std::move(weights));
}

double PopularityProfile::head_mass(int count) const {
  count = std::clamp(count, 0, num_files());
  return std::accumulate(probs_.begin(), probs_.begin() + count, 0.0);
}

CodingConfig::CodingConfig(int n, int cache_files)
    : n(n), cache_files(cache_files) {
  if (n < 1) throw DomainError("coding parameter n must be >= 1");
  if (cache_files < 1) throw DomainError("cache size M must be >= 1");
}

CachingVector::CachingVector(std::vector<int> packets)
    : packets_(std::move(packets)) {
  for (int m : packets_) {
    if (m < 0) throw DomainError("caching vector entries must be >= 0");
  }
}

CachingVector CachingVector::most_popular(int num_files, int n,
                                          int cache_files) {
  std::vector<int> packets(num_files, 0);
  std::fill_n(packets.begin(), std::min(num_files, cache_files), n);
  return CachingVector(std::move(packets));
}

long CachingVector::total_packets() const {
  return std::accumulate(packets_.begin(), packets_.end(), 0L);
}

bool CachingVector::is_non_increasing() const {
  return std::is_sorted(packets_.rbegin(), packets_.rend());
}

bool CachingVector::is_feasible(const CodingConfig& coding) const {
  for (int m : packets_) {
    if (m < 0 || m > coding.n) return false;
  }
  return total_packets() <= coding.capacity_packets();
}

void CachingVector::require_feasible(const CodingConfig& coding,
                                     int num_files) const {
  if (this->num_files() != num_files) {
    throw InfeasibleError("caching vector has " +
                          std::to_string(this->num_files()) +
                          " entries, expected " + std::to_string(num_files));
  }
  for (std::size_t j = 0; j < packets_.size(); ++j) {
    if (packets_[j] > coding.n) {
      throw InfeasibleError("m_" + std::to_string(j + 1) + " = " +
                            std::to_string(packets_[j]) + " exceeds n = " +
                            std::to_string(coding.n));
    }
  }
  if (total_packets() > coding.capacity_packets()) {
    throw InfeasibleError("caching vector stores " +
                          std::to_string(total_packets()) +
                          " packets, capacity is M*n = " +
                          std::to_string(coding.capacity_packets()));
  }
}

std::string CachingVector::to_string() const {
  std::ostringstream out;
  for (std::size_t j = 0; j < packets_.size(); ++j) {
    if (j > 0) out << ' ';
    out << packets_[j];
  }
  return out.str();
}

double ContinuousAllocation::total() const {
  return std::accumulate(fractions.begin(), fractions.end(), 0.0);
}

}  // namespace sicache
