#pragma once

#include <vector>

#include "crr/param.hpp"
#include "crr/scaled_value.hpp"

namespace crr {

/// c_n = eta / (lambda + n - 1), n >= 1.
double coeff_c(int n, const ParamB& b);

/// d_{n_plus} = (1/4) n (n + 2 lambda - 1) / ((n + lambda - 1)(n + lambda)),
/// with n = n_plus - 1.  Requires n_plus >= 2; value lies in (0, 1).
double coeff_d(int n_plus, double lambda);

/// Evaluation of the degree-n, k-associated polynomial at x, with the
/// previous-degree value and (optionally) first and second derivatives.
struct EvalRecord {
  int n = 0;
  int k = 0;
  double x = 0.0;
  ScaledValue p;       // P_n^{(k)}(b;x)
  ScaledValue p_prev;  // P_{n-1}^{(k)}(b;x); zero when n == 0
  ScaledValue dp;
  ScaledValue d2p;
};

EvalRecord eval_crr(int n, int k, const ParamB& b, double x, bool want_derivs = false);

/// Hermitian tridiagonal pencil (A_n, B_n) whose characteristic polynomial
/// det(x B_n - A_n) is the degree-n polynomial.  Off-diagonal magnitudes
/// sqrt(d_2)..sqrt(d_n) are shared by both matrices; B has unit diagonal.
struct GevpPair {
  int n = 0;
  std::vector<double> a_diag;  // c_1..c_n
  std::vector<double> a_off;   // sqrt(d_2)..sqrt(d_n)
  std::vector<double> b_off;   // same magnitudes
};

GevpPair gevp_matrices(int n, const ParamB& b);

/// det(x B_n - A_n) by the tridiagonal determinant recurrence
/// D_j = (x - c_j) D_{j-1} - d_j (x^2 + 1) D_{j-2}.
ScaledValue char_poly_det(int n, const ParamB& b, double x);

/// Scale-free residual of the second-order ODE satisfied by P_n(b;x).
double ode_residual(int n, const ParamB& b, double x);

/// Relative residual of the interlacing product identity
/// P_n^{(k+1)} P_n^{(k)} - P_{n-1}^{(k+1)} P_{n+1}^{(k)} = (1+x^2)^n prod d_{k+j}.
double wronskian_check(int n, int k, const ParamB& b, double x);

}  // namespace crr
