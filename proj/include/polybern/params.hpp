#pragma once

#include "polybern/rational.hpp"

namespace polybern {

/// The parameter triple (a, b, c), carried as exact logarithms
/// alpha = ln a, beta = ln b, gamma = ln c.
///
/// Invariant: alpha + beta != 0. Every kernel built from these parameters
/// divides by ln a + ln b, so the constructor rejects the degenerate case
/// with ParamError.
class Params {
 public:
  Params(Rat alpha, Rat beta, Rat gamma = 1);

  /// a = e, b = 1, c = e: the classical poly-Bernoulli setting.
  static Params classical() { return Params(1, 0, 1); }

  const Rat& alpha() const { return alpha_; }
  const Rat& beta() const { return beta_; }
  const Rat& gamma() const { return gamma_; }
  /// ln a + ln b.
  Rat log_ab() const { return alpha_ + beta_; }

  friend bool operator==(const Params&, const Params&) = default;

 private:
  Rat alpha_;
  Rat beta_;
  Rat gamma_;
};

}  // namespace polybern
