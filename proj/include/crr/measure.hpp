#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "crr/param.hpp"

namespace crr {

/// Minimal and maximal parameter sequences of the chain sequence {d_{k+n}}.
/// The minimal sequence is closed-form for k = 0 only and is left empty
/// otherwise.  Indexing: m[i], M[i] hold m_{i+1}, M_{i+1}.
struct ChainParams {
  double lambda = 0.0;
  int k = 0;
  std::vector<double> m;
  std::vector<double> M;
};

ChainParams chain_params(double lambda, int k, int n_max);

/// log |Gamma(lambda + i eta)|^2, lambda > 0.
double log_gamma_abs_sq(const ParamB& b);

/// log Gamma(z) on Re z > 0 (Lanczos with upward shifts for small Re z).
std::complex<double> log_gamma(std::complex<double> z);

/// The explicit k = 0 weight; requires lambda > 1/2.
struct WeightK0 {
  ParamB b;
  double log_norm_const;
};

WeightK0 make_weight(const ParamB& b);

double weight_density(const WeightK0& w, double x);

/// Integral of f against the weight over the whole real line.
/// x = sinh(s) substitution, then adaptive panel-halving Gauss-Legendre
/// until 1e-10 relative agreement; throws on non-convergence with the
/// last two estimates in the message.
double integrate(const WeightK0& w, const std::function<double(double)>& f);

struct VerblunskySeq {
  ParamB b;
  int k = 0;
  std::vector<std::complex<double>> tau;   // tau[0..n_max], tau[0] = 1
  std::vector<std::complex<double>> beta;  // beta[i] = beta_i, i = 0..n_max-1
  std::vector<double> gamma;               // gamma[0..n_max], gamma[0] = 1
};

/// Requires (k = 0 and lambda > 1/2) or (k >= 1 and lambda > 0).
VerblunskySeq verblunsky_seq(const ParamB& b, int k, int n_max);

/// Max over j = 0..n of the normalized orthogonality residual
/// | int x^j P_n/(1+x^2)^n dphi - gamma_n delta_{n,j} | / gamma_n (k = 0).
double orthogonality_check(int n, const ParamB& b);

/// Residual of the divided-difference integral representation of the
/// first-associated polynomial at a fixed set of probe points (k = 0).
double associated_integral_check(int n, const ParamB& b);

}  // namespace crr
