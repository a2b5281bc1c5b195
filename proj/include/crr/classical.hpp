#pragma once

#include <vector>

#include "crr/scaled_value.hpp"
#include "crr/zeros.hpp"

namespace crr {

/// H_n or L_n^{(alpha)} at x via the three-term recurrences, scaled.
ScaledValue classical_eval(Family family, int n, double alpha, double x);

/// Max residual of the electrostatic (Stieltjes) system satisfied by the
/// zeros: Hermite   sum_{i!=k} 1/(h_k - h_i) = h_k,
///        Laguerre  sum_{i!=k} l_i/(l_i - l_k) = (n + lambda - 1) - l_k/2
/// with alpha = 2*lambda - 1.
double stieltjes_residual(Family family, int n, double lambda = 1.0);

enum class ElectroKind { T_hermite, Ttilde_laguerre };

/// Symmetric n x n matrix from the zero-perturbation linear system.
/// For Ttilde the (similar) symmetrized form with entries
/// -sqrt(l_k l_j)/(l_k - l_j)^2 is stored; it has the same spectrum.
struct ElectrostaticMatrix {
  int n = 0;
  ElectroKind kind = ElectroKind::T_hermite;
  std::vector<double> entries;  // row-major n*n, symmetric
};

ElectrostaticMatrix electrostatic_matrix(ElectroKind kind, int n, double lambda = 1.0);

/// Smallest-eigenvalue estimate: cyclic Jacobi rotations for n <= 32,
/// LDL^T pivots (sign certificate only) for larger n.
double electrostatic_psd(ElectroKind kind, int n, double lambda = 1.0);

/// Smallest eigenvalue of a symmetric matrix given row-major (n <= 32 path).
double symmetric_min_eigenvalue(const std::vector<double>& a, int n);

}  // namespace crr
