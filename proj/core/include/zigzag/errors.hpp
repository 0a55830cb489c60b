#pragma once

#include <stdexcept>
#include <string>

namespace zigzag {

/// Input outside the mathematical domain of an operation (e.g. g <= 1/2 for
/// the no-pendulum zigzag).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// The damped-Newton path solver did not reach its residual tolerance.
class NoConvergence : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// The pose admits no closed zigzag path (ray misses a face or aperture).
class NoSolution : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace zigzag
