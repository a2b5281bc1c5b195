#pragma once

#include <vector>

#include "crr/core.hpp"
#include "crr/param.hpp"

namespace crr {

enum class Family { CRR, Hermite, Laguerre };

/// Interval containing all zeros of the degree-n polynomial, n >= 4,
/// with its discriminant.
struct ExtremeBounds {
  int n = 0;
  double lower = 0.0;
  double upper = 0.0;
  double delta_n = 0.0;
};

ExtremeBounds extreme_bounds(int n, const ParamB& b);

/// Ordered zeros of a degree-n (k-associated) polynomial.
struct ZeroSet {
  Family family = Family::CRR;
  int n = 0;
  int k = 0;
  double lambda = 0.0;  // CRR
  double eta = 0.0;     // CRR
  double alpha = 0.0;   // Laguerre
  std::vector<double> zeros;  // strictly increasing, length n
};

/// Zeros via interlacing induction: the single degree-1 zero is closed-form,
/// each zero of degree m+1 is bracketed by consecutive zeros of degree m,
/// outer brackets from extreme_bounds (k = 0, m >= 4) or outward expansion.
/// Throws on bracket failure (a coefficient bug, never skipped silently).
ZeroSet crr_zeros(int n, int k, const ParamB& b);

ZeroSet classical_zeros(Family family, int n, double alpha = 0.0);

struct ThetaZeroSet {
  std::vector<double> thetas;  // arctan of each zero, strictly increasing
};

ThetaZeroSet theta_transform(const ZeroSet& zs);

/// Default bisection tolerance (1e-13 relative), overridable via the
/// CRR_ZEROS_TOL environment variable.
double zeros_tolerance();

}  // namespace crr
