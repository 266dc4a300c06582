#ifndef SICACHE_MODEL_H_
#define SICACHE_MODEL_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace sicache {

// Physical-layer parameters of the interference-limited small-cell tier.
// tau is the SIR decoding threshold in linear scale.
class ChannelModel {
 public:
  ChannelModel(double alpha, double tau);

  double alpha() const { return alpha_; }
  double tau() const { return tau_; }

  ChannelModel with_tau(double tau) const { return ChannelModel(alpha_, tau); }

 private:
  double alpha_;
  double tau_;
};

// Normalized, non-increasing request probabilities p_1 >= ... >= p_F.
class PopularityProfile {
 public:
  explicit PopularityProfile(std::vector<double> probs);

  // p_j = j^-gamma / sum_f f^-gamma.
  static PopularityProfile zipf(int num_files, double gamma);

  int num_files() const { return static_cast<int>(probs_.size()); }
  double operator[](std::size_t j) const { return probs_[j]; }
  std::span<const double> probs() const { return probs_; }

  // Total probability of the `count` most popular files.
  double head_mass(int count) const;

 private:
  std::vector<double> probs_;
};

// n fragments per file; each SBS stores at most `cache_files` whole files.
struct CodingConfig {
  CodingConfig(int n, int cache_files);

  int n;
  int cache_files;

  long capacity_packets() const { return static_cast<long>(n) * cache_files; }
};

// Packets of each file stored per SBS.
class CachingVector {
 public:
  CachingVector() = default;
  explicit CachingVector(std::vector<int> packets);

  // [n x M, 0 x (F - M)]: the most-popular-caching placement.
  static CachingVector most_popular(int num_files, int n, int cache_files);

  int num_files() const { return static_cast<int>(packets_.size()); }
  int operator[](std::size_t j) const { return packets_[j]; }
  int& operator[](std::size_t j) { return packets_[j]; }
  std::span<const int> packets() const { return packets_; }

  long total_packets() const;
  bool is_non_increasing() const;

  // Entries in {0..n} and sum_j m_j / n <= M.
  bool is_feasible(const CodingConfig& coding) const;
  // Throws InfeasibleError naming the violated condition.
  void require_feasible(const CodingConfig& coding, int num_files) const;

  std::string to_string() const;

  friend bool operator==(const CachingVector&, const CachingVector&) = default;
  friend auto operator<=>(const CachingVector&, const CachingVector&) = default;

 private:
  std::vector<int> packets_;
};

// Continuous relaxation x_j = m_j / n in [0, 1].
struct ContinuousAllocation {
  std::vector<double> fractions;

  double total() const;
};

}  // namespace sicache

#endif  // SICACHE_MODEL_H_
