#include "polybern/params.hpp"

#include "polybern/errors.hpp"

namespace polybern {

Params::Params(Rat alpha, Rat beta, Rat gamma)
    : alpha_(std::move(alpha)), beta_(std::move(beta)), gamma_(std::move(gamma)) {
  if (alpha_ + beta_ == 0) throw ParamError("ln a + ln b must be nonzero");
}

}  // namespace polybern
