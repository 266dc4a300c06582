#ifndef SICACHE_ERRORS_H_
#define SICACHE_ERRORS_H_

#include <stdexcept>

namespace sicache {

// Argument outside the mathematical domain of a formula.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Caching vector violating the per-SBS cache size constraint, or a placement
// problem that admits no nontrivial solution.
class InfeasibleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Exhaustive search refused because the enumeration space is too large.
class InstanceTooLargeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace sicache

#endif  // SICACHE_ERRORS_H_
