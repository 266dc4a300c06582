#include <cmath>
#include <map>
#include <string>

#include "sicache/analytics.h"
#include "sicache/errors.h"
#include "sicache/quadrature.h"

namespace sicache {
namespace {

constexpr double kTruncationLevel = 1e-12;
constexpr double kAbsTol = 1e-11;
constexpr double kRelTol = 1e-11;

int ceil_div(int num, int den) { return (num + den - 1) / den; }

}  // namespace

double chain_rate_integral(double alpha, int k) {
  if (!(alpha > 2.0)) throw DomainError("ergodic rate: alpha must be > 2");
  if (k < 1) throw DomainError("ergodic rate: layer count must be >= 1");
  const double exponent = 0.5 * static_cast<double>(k) * (k + 1);
  // tau = 2^r - 1 from the rate substitution.
  auto integrand = [&](double r) {
    const double tau = std::expm1(r * M_LN2);
    return std::exp(-exponent * std::log(q_factor(alpha, tau)));
  };

  // Q grows without bound in tau, so the integrand is decreasing: bracket
  // the truncation point by doubling, then bisect.
  double hi = 1.0;
  while (integrand(hi) >= kTruncationLevel) hi *= 2.0;
  double lo = hi / 2.0;
  if (integrand(lo) < kTruncationLevel) lo = 0.0;
  while (hi - lo > 1e-6 * hi) {
    const double mid = 0.5 * (lo + hi);
    (integrand(mid) >= kTruncationLevel ? lo : hi) = mid;
  }
  const double upper = hi;

  // Dyadic panels keep the sqrt-type behaviour near r = 0 in its own piece.
  double total = 0.0;
  double a = 0.0;
  double b = std::min(1.0, upper);
  while (a < upper) {
    total += integrate(integrand, a, b, kAbsTol, kRelTol).value;
    a = b;
    b = std::min(2.0 * b, upper);
  }
  return total;
}

double ergodic_rate(double alpha, int n, int m) {
  if (n < 1) throw DomainError("ergodic_rate: n must be >= 1");
  if (m < 0 || m > n) {
    throw DomainError("ergodic_rate: m = " + std::to_string(m) +
                      " outside {0.." + std::to_string(n) + "}");
  }
  if (m == 0) return 0.0;
  const int layers = ceil_div(n, m);
  return layers * chain_rate_integral(alpha, layers);
}

std::vector<double> ergodic_rate_table(double alpha, int n) {
  if (n < 1) throw DomainError("ergodic_rate_table: n must be >= 1");
  std::vector<double> rates(n + 1, 0.0);
  std::map<int, double> by_layers;
  for (int m = 1; m <= n; ++m) {
    const int layers = ceil_div(n, m);
    auto it = by_layers.find(layers);
    if (it == by_layers.end()) {
      it = by_layers.emplace(layers, layers * chain_rate_integral(alpha, layers))
               .first;
    }
    rates[m] = it->second;
  }
  return rates;
}

}  // namespace sicache
