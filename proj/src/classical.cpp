#include "crr/classical.hpp"

#include <cmath>
#include <stdexcept>

namespace crr {

ScaledValue classical_eval(Family family, int n, double alpha, double x) {
  if (n < 0) throw std::invalid_argument("classical_eval: n >= 0 required");
  if (family == Family::Laguerre && !(alpha > -1.0))
    throw std::invalid_argument("classical_eval: Laguerre requires alpha > -1");
  if (family == Family::CRR)
    throw std::invalid_argument("classical_eval: use eval_crr for the CRR family");

  if (n == 0) return ScaledValue::from(1.0);

  double p, pp = 1.0;
  int scale = 0;
  if (family == Family::Hermite)
    p = 2.0 * x;
  else
    p = alpha + 1.0 - x;

  for (int j = 1; j < n; ++j) {
    double np;
    if (family == Family::Hermite) {
      np = 2.0 * x * p - 2.0 * j * pp;
    } else {
      np = (2.0 + (alpha - 1.0 - x) / (j + 1.0)) * p -
           (1.0 + (alpha - 1.0) / (j + 1.0)) * pp;
    }
    pp = p;
    p = np;
    double m = std::max(std::abs(p), std::abs(pp));
    if (m != 0.0) {
      int e = 0;
      std::frexp(m, &e);
      if (e != 0) {
        double f = std::ldexp(1.0, -e);
        p *= f;
        pp *= f;
        scale += e;
      }
    }
  }
  ScaledValue s = ScaledValue::from(p);
  if (!s.is_zero()) s.exp2 += scale;
  return s;
}

double stieltjes_residual(Family family, int n, double lambda) {
  if (n < 2) throw std::invalid_argument("stieltjes_residual: n >= 2 required");
  double worst = 0.0;
  if (family == Family::Hermite) {
    std::vector<double> h = classical_zeros(Family::Hermite, n).zeros;
    for (int k = 0; k < n; ++k) {
      double s = 0.0;
      for (int i = 0; i < n; ++i)
        if (i != k) s += 1.0 / (h[k] - h[i]);
      worst = std::max(worst, std::abs(s - h[k]));
    }
  } else if (family == Family::Laguerre) {
    double alpha = 2.0 * lambda - 1.0;
    std::vector<double> l = classical_zeros(Family::Laguerre, n, alpha).zeros;
    for (int k = 0; k < n; ++k) {
      double s = 0.0;
      for (int i = 0; i < n; ++i)
        if (i != k) s += l[i] / (l[i] - l[k]);
      worst = std::max(worst, std::abs(s - (n + lambda - 1.0) + 0.5 * l[k]));
    }
  } else {
    throw std::invalid_argument("stieltjes_residual: classical families only");
  }
  return worst;
}

ElectrostaticMatrix electrostatic_matrix(ElectroKind kind, int n, double lambda) {
  if (n < 2) throw std::invalid_argument("electrostatic_matrix: n >= 2 required");
  ElectrostaticMatrix m;
  m.n = n;
  m.kind = kind;
  m.entries.assign(static_cast<size_t>(n) * n, 0.0);
  auto at = [&](int r, int c) -> double& { return m.entries[static_cast<size_t>(r) * n + c]; };

  if (kind == ElectroKind::T_hermite) {
    std::vector<double> h = classical_zeros(Family::Hermite, n).zeros;
    for (int k = 0; k < n; ++k) {
      double diag = 0.0;
      for (int j = 0; j < n; ++j) {
        if (j == k) continue;
        double g = h[k] - h[j];
        at(k, j) = -1.0 / (g * g);
        diag += 1.0 / (g * g);
      }
      at(k, k) = diag;
    }
  } else {
    double alpha = 2.0 * lambda - 1.0;
    std::vector<double> l = classical_zeros(Family::Laguerre, n, alpha).zeros;
    for (int k = 0; k < n; ++k) {
      double diag = 0.0;
      for (int j = 0; j < n; ++j) {
        if (j == k) continue;
        double g = l[k] - l[j];
        at(k, j) = -std::sqrt(l[k] * l[j]) / (g * g);
        diag += l[j] / (g * g);
      }
      at(k, k) = diag;
    }
  }
  return m;
}

double symmetric_min_eigenvalue(const std::vector<double>& mat, int n) {
  std::vector<double> a = mat;
  auto at = [&](int r, int c) -> double& { return a[static_cast<size_t>(r) * n + c]; };

  double norm = 0.0;
  for (double v : a) norm += v * v;
  norm = std::sqrt(norm);

  // Cyclic Jacobi rotations.
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += at(p, q) * at(p, q);
    if (std::sqrt(off) <= 1e-15 * (norm + 1e-300)) break;

    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double apq = at(p, q);
        if (apq == 0.0) continue;
        double tau = (at(q, q) - at(p, p)) / (2.0 * apq);
        double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
        double c = 1.0 / std::sqrt(1.0 + t * t);
        double s = t * c;
        for (int i = 0; i < n; ++i) {
          double aip = at(i, p), aiq = at(i, q);
          at(i, p) = c * aip - s * aiq;
          at(i, q) = s * aip + c * aiq;
        }
        for (int i = 0; i < n; ++i) {
          double api = at(p, i), aqi = at(q, i);
          at(p, i) = c * api - s * aqi;
          at(q, i) = s * api + c * aqi;
        }
      }
    }
  }
  double mn = at(0, 0);
  for (int i = 1; i < n; ++i) mn = std::min(mn, at(i, i));
  return mn;
}

namespace {

// LDL^T pivots with a diagonal tolerance; returns the smallest pivot seen.
// A certificate of sign only, not an eigenvalue.
double ldlt_min_pivot(const std::vector<double>& mat, int n) {
  std::vector<double> a = mat;
  auto at = [&](int r, int c) -> double& { return a[static_cast<size_t>(r) * n + c]; };
  double norm = 0.0;
  for (double v : a) norm = std::max(norm, std::abs(v));
  double tol = 1e-13 * norm;

  double min_pivot = at(0, 0);
  for (int k = 0; k < n; ++k) {
    double d = at(k, k);
    min_pivot = std::min(min_pivot, d);
    if (std::abs(d) <= tol) continue;  // treat as a zero pivot, skip elimination
    for (int i = k + 1; i < n; ++i) {
      double f = at(i, k) / d;
      for (int j = k + 1; j <= i; ++j) at(i, j) -= f * at(k, j);
      for (int j = k + 1; j <= i; ++j) at(j, i) = at(i, j);
    }
  }
  return min_pivot;
}

}  // namespace

double electrostatic_psd(ElectroKind kind, int n, double lambda) {
  ElectrostaticMatrix m = electrostatic_matrix(kind, n, lambda);
  if (n <= 32) return symmetric_min_eigenvalue(m.entries, n);
  return ldlt_min_pivot(m.entries, n);
}

}  // namespace crr
