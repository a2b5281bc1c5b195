#pragma once

#include <string>
#include <vector>

#include "crr/param.hpp"
#include "crr/scaled_value.hpp"
#include "crr/zeros.hpp"

namespace crr {

/// Lambda_n(theta) of the Sturm-Liouville form v'' + Lambda v = 0.
double sl_lambda(int n, const ParamB& b, double theta);

/// v_n(theta) = e^{eta theta} cos^{n+lambda}(theta) P_n(b; tan theta).
ScaledValue sl_v(int n, const ParamB& b, double theta);

/// Critical point of Lambda_n: tan(theta) = eta (n+lambda) / (lambda (lambda-1)).
double frak_m(int n, const ParamB& b);

struct RangeVerdict {
  std::string range;  // e.g. "x < 0", "x > frak_M"
  std::string claim;  // "convex", "concave" or "no claim"
  bool pass = true;   // vacuously true with < 3 zeros in range or "no claim"
  int gaps = 0;
  double min_margin = 0.0;  // signed gap-difference margin (claim direction)
  bool tie = false;         // |gap difference| within tolerance somewhere
};

struct ConvexityReport {
  int n = 0;
  double lambda = 0.0, eta = 0.0;
  std::string case_label;
  double frak_M = 0.0;  // 0 when lambda == 1
  std::vector<RangeVerdict> verdicts;
};

ConvexityReport convexity_report(int n, const ParamB& b);

struct SpacingResult {
  bool applicable = false;
  std::string case_label;  // "I", "II", "III" or "not applicable"
  bool pass = false;
  double bound = 0.0;       // pi/sqrt(f_n) or pi/sqrt(g_n)
  double min_margin = 0.0;  // worst signed slack of the inequality
  double f_n = 0.0;
  double g_n = 0.0;
};

SpacingResult spacing_check(int n, const ParamB& b);

double spacing_f(int n, const ParamB& b);
double spacing_g(int n, double eta);

struct DensityResult {
  bool achieved = false;
  int n = 0;         // smallest tested degree meeting the gap target
  double max_gap = 0.0;
};

/// Doubles n from 8 (cap 2048) until every gap between consecutive zeros
/// meeting (t1, t2) is below eps.  Requires lambda >= 1.
DensityResult density_probe(const ParamB& b, double t1, double t2, double eps);

struct SlopeFit {
  double slope = 0.0;
  std::vector<double> errors;  // one per grid value
};

/// e(lambda) = max_k |x_{n,k} - h_{n,k}/sqrt(lambda) - eta/lambda|, with the
/// log-log slope fitted discarding the smallest grid value.
SlopeFit lambda_branch_slope(int n, double eta, const std::vector<double>& lambdas);

/// e(eta) = max_k |x_{n,k} - 2 eta / l_{n,n+1-k}|, alpha = 2 lambda - 1.
SlopeFit eta_branch_slope(int n, double lambda, const std::vector<double>& etas);

/// sup_x |Uhat_n(b;x) - H_n(x) + (2 eta n / sqrt(lambda)) H_{n-1}(x)| * lambda
/// over a fixed probe grid.
double hermite_expansion_sup(int n, double eta, double lambda);

/// sup_x |Utilde_n(b;x) - L_n^{(2 lambda - 1)}(x)| * eta^2 over a probe grid.
double laguerre_expansion_sup(int n, double lambda, double eta);

}  // namespace crr
