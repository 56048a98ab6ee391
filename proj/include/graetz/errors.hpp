#pragma once

#include <stdexcept>
#include <string>

namespace graetz {

/// Input outside an operation's mathematical domain (bad argument, bad config).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An iterative procedure (series, bisection, bracket search) failed to converge.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A quantity that must be bounded away from zero collapsed (corrupted mode,
/// vanishing bulk temperature).
class DegenerateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace graetz
