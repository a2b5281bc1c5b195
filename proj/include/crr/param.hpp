#pragma once

#include <cmath>
#include <stdexcept>

namespace crr {

/// The parameter b = lambda + i*eta of the polynomial family, lambda > 0.
struct ParamB {
  double lambda;
  double eta;

  ParamB(double lambda_, double eta_) : lambda(lambda_), eta(eta_) {
    if (!(lambda > 0.0) || !std::isfinite(lambda) || !std::isfinite(eta))
      throw std::invalid_argument("ParamB: requires finite lambda > 0 and finite eta");
  }
};

}  // namespace crr
