#include <cmath>
#include <string>

#include "sicache/analytics.h"
#include "sicache/errors.h"
#include "sicache/quadrature.h"

namespace sicache {
namespace {

constexpr double kAbsTol = 1e-300;
constexpr double kRelTol = 1e-13;

void check_shape(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError("beta_complement: shape parameters must be finite and > 0");
  }
}

// int_lo^hi u^(a-1)(1-u)^(b-1) du for 0 < lo < hi <= 1/2, after t = u^a:
// (1/a) int (1 - t^(1/a))^(b-1) dt. The integrand is bounded on the range.
double lower_piece(double a, double b, double lo, double hi) {
  const double inv_a = 1.0 / a;
  auto f = [&](double t) { return std::pow(-std::expm1(inv_a * std::log(t)), b - 1.0); };
  const auto r = integrate(f, std::pow(lo, a), std::pow(hi, a), kAbsTol, kRelTol);
  return r.value / a;
}

// int_c^1 u^(a-1)(1-u)^(b-1) du for c >= 1/2, given 1 - c, after s = (1-u)^b:
// (1/b) int_0^((1-c)^b) (1 - s^(1/b))^(a-1) ds.
double upper_piece(double a, double b, double one_minus_c) {
  const double inv_b = 1.0 / b;
  auto f = [&](double s) { return std::pow(-std::expm1(inv_b * std::log(s)), a - 1.0); };
  const auto r = integrate(f, 0.0, std::pow(one_minus_c, b), kAbsTol, kRelTol);
  return r.value / b;
}

}  // namespace

double beta_complement_upper(double a, double b, double one_minus_z) {
  check_shape(a, b);
  if (!(one_minus_z > 0.0 && one_minus_z < 1.0)) {
    throw DomainError("beta_complement: z must lie in (0, 1)");
  }
  const double z = 1.0 - one_minus_z;
  if (z >= 0.5) return upper_piece(a, b, one_minus_z);
  return lower_piece(a, b, z, 0.5) + upper_piece(a, b, 0.5);
}

double beta_complement(double a, double b, double z) {
  if (!(z > 0.0 && z < 1.0)) {
    throw DomainError("beta_complement: z must lie in (0, 1), got " +
                      std::to_string(z));
  }
  check_shape(a, b);
  if (z >= 0.5) return upper_piece(a, b, 1.0 - z);
  return lower_piece(a, b, z, 0.5) + upper_piece(a, b, 0.5);
}

double q_factor(double alpha, double tau) {
  if (!(alpha > 2.0)) throw DomainError("q_factor: alpha must be > 2");
  if (!(tau >= 0.0) || std::isnan(tau)) {
    throw DomainError("q_factor: tau must be >= 0");
  }
  if (tau == 0.0) return 1.0;
  if (std::isinf(tau)) return tau;
  const double shape = 2.0 / alpha;
  // Pass whichever of z = 1/(1+tau) and 1 - z = tau/(1+tau) is the smaller
  // one so neither loses precision to cancellation.
  const double tail =
      tau >= 1.0 ? beta_complement(shape, 1.0 - shape, 1.0 / (1.0 + tau))
                 : beta_complement_upper(shape, 1.0 - shape, tau / (1.0 + tau));
  return 1.0 + shape * std::pow(tau, shape) * tail;
}

double q_factor(const ChannelModel& channel) {
  return q_factor(channel.alpha(), channel.tau());
}

}  // namespace sicache
