#pragma once

#include <stdexcept>
#include <string>

namespace polybern {

/// Invalid parameter triple (e.g. ln a + ln b = 0, or a numeric-mode domain violation).
class ParamError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Formal power series operation that has no truncated result.
class SeriesError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A brute-force or table request exceeded its documented size guard.
class SizeLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A numeric evaluation did not reach its tolerance. `achieved` carries the
/// best error estimate obtained before giving up.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double achieved)
      : std::runtime_error(what), achieved_(achieved) {}
  double achieved() const noexcept { return achieved_; }

 private:
  double achieved_;
};

/// Broken internal invariant. Never a user error.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace polybern
