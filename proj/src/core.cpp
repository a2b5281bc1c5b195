#include "crr/core.hpp"

#include <cmath>
#include <stdexcept>

namespace crr {

double coeff_c(int n, const ParamB& b) {
  if (n < 1) throw std::invalid_argument("coeff_c: n >= 1 required");
  return b.eta / (b.lambda + n - 1);
}

double coeff_d(int n_plus, double lambda) {
  if (n_plus < 2) throw std::invalid_argument("coeff_d: n_plus >= 2 required");
  double n = n_plus - 1;
  return 0.25 * n * (n + 2.0 * lambda - 1.0) / ((n + lambda - 1.0) * (n + lambda));
}

namespace {

// Recurrence state: six values sharing one power-of-two scale, renormalized
// after every step so (x^2+1)^n growth never overflows.
struct RecState {
  double p = 1.0, pp = 0.0;      // degrees m, m-1
  double dp = 0.0, dpp = 0.0;    // first derivatives
  double d2p = 0.0, d2pp = 0.0;  // second derivatives
  int scale = 0;

  void renorm() {
    double m = std::abs(p);
    m = std::max(m, std::abs(pp));
    m = std::max(m, std::abs(dp));
    m = std::max(m, std::abs(dpp));
    m = std::max(m, std::abs(d2p));
    m = std::max(m, std::abs(d2pp));
    if (m == 0.0) return;
    int e = 0;
    std::frexp(m, &e);
    if (e == 0) return;
    double f = std::ldexp(1.0, -e);
    p *= f;
    pp *= f;
    dp *= f;
    dpp *= f;
    d2p *= f;
    d2pp *= f;
    scale += e;
  }
};

ScaledValue pack(double v, int scale) {
  ScaledValue s = ScaledValue::from(v);
  if (!s.is_zero()) s.exp2 += scale;
  return s;
}

}  // namespace

EvalRecord eval_crr(int n, int k, const ParamB& b, double x, bool want_derivs) {
  if (n < 0 || k < 0) throw std::invalid_argument("eval_crr: n, k >= 0 required");
  if (!std::isfinite(x)) throw std::invalid_argument("eval_crr: x must be finite");

  EvalRecord rec;
  rec.n = n;
  rec.k = k;
  rec.x = x;
  if (n == 0) {
    rec.p = ScaledValue::from(1.0);
    return rec;
  }

  RecState s;
  // degree 0 -> 1
  s.pp = 1.0;
  s.p = x - coeff_c(k + 1, b);
  s.dp = 1.0;

  double q = x * x + 1.0;
  for (int m = 1; m < n; ++m) {
    double c = coeff_c(k + m + 1, b);
    double d = coeff_d(k + m + 1, b.lambda);
    double a = x - c;
    double np = a * s.p - d * q * s.pp;
    double ndp = a * s.dp + s.p - d * q * s.dpp - 2.0 * x * d * s.pp;
    double nd2p = 0.0;
    if (want_derivs)
      nd2p = a * s.d2p + 2.0 * s.dp - d * q * s.d2pp - 4.0 * x * d * s.dpp - 2.0 * d * s.pp;
    s.pp = s.p;
    s.p = np;
    s.dpp = s.dp;
    s.dp = ndp;
    s.d2pp = s.d2p;
    s.d2p = nd2p;
    s.renorm();
  }

  rec.p = pack(s.p, s.scale);
  rec.p_prev = pack(s.pp, s.scale);
  rec.dp = pack(s.dp, s.scale);
  if (want_derivs) rec.d2p = pack(s.d2p, s.scale);
  return rec;
}

GevpPair gevp_matrices(int n, const ParamB& b) {
  if (n < 1) throw std::invalid_argument("gevp_matrices: n >= 1 required");
  GevpPair g;
  g.n = n;
  g.a_diag.reserve(n);
  for (int j = 1; j <= n; ++j) g.a_diag.push_back(coeff_c(j, b));
  for (int j = 2; j <= n; ++j) g.a_off.push_back(std::sqrt(coeff_d(j, b.lambda)));
  g.b_off = g.a_off;
  return g;
}

ScaledValue char_poly_det(int n, const ParamB& b, double x) {
  GevpPair g = gevp_matrices(n, b);
  // The 2x2 off-diagonal blocks contribute (x*sqrt(d) - i*sqrt(d)) times its
  // conjugate, i.e. d*(x^2+1).
  double q = x * x + 1.0;
  double dprev2 = 0.0;                 // D_{j-2}
  double dprev = 1.0;                  // D_{j-1}, D_0 = 1
  int scale = 0;
  for (int j = 1; j <= n; ++j) {
    double dj = (j >= 2) ? g.a_off[j - 2] * g.a_off[j - 2] : 0.0;
    double cur = (x - g.a_diag[j - 1]) * dprev - dj * q * dprev2;
    dprev2 = dprev;
    dprev = cur;
    double m = std::max(std::abs(dprev), std::abs(dprev2));
    if (m != 0.0) {
      int e = 0;
      std::frexp(m, &e);
      if (e != 0) {
        double f = std::ldexp(1.0, -e);
        dprev *= f;
        dprev2 *= f;
        scale += e;
      }
    }
  }
  return pack(dprev, scale);
}

double ode_residual(int n, const ParamB& b, double x) {
  if (n < 1) throw std::invalid_argument("ode_residual: n >= 1 required");
  EvalRecord r = eval_crr(n, 0, b, x, true);
  double A = x * x + 1.0;
  double B = (n + b.lambda - 1.0) * x - b.eta;
  double C = n * (n + 2.0 * b.lambda - 1.0);

  ScaledValue t1 = r.d2p * A;
  ScaledValue t2 = r.dp * (2.0 * B);
  ScaledValue t3 = r.p * C;
  ScaledValue num = t1 - t2 + t3;
  if (num.is_zero()) return 0.0;
  // De-scale all terms against the largest one; the ratio is scale-free.
  double eref = std::max({t1.log_abs(), t2.log_abs(), t3.log_abs()});
  double den = std::exp(t1.log_abs() - eref) + std::exp(t2.log_abs() - eref) +
               std::exp(t3.log_abs() - eref) + 1e-300;
  return std::exp(num.log_abs() - eref) / den;
}

double wronskian_check(int n, int k, const ParamB& b, double x) {
  if (n < 1 || k < 0) throw std::invalid_argument("wronskian_check: n >= 1, k >= 0 required");
  EvalRecord up = eval_crr(n, k + 1, b, x);      // P_n^{(k+1)}, P_{n-1}^{(k+1)}
  EvalRecord lo = eval_crr(n + 1, k, b, x);      // P_{n+1}^{(k)}, P_n^{(k)}
  ScaledValue t1 = up.p * lo.p_prev;
  ScaledValue t2 = up.p_prev * lo.p;
  ScaledValue lhs = t1 - t2;

  double log_rhs = n * std::log1p(x * x);
  for (int j = 2; j <= n + 1; ++j) log_rhs += std::log(coeff_d(k + j, b.lambda));
  ScaledValue rhs = ScaledValue::from_log(log_rhs);

  ScaledValue diff = lhs - rhs;
  if (diff.is_zero()) return 0.0;
  // Normalize by the largest term: the two products may exceed the
  // right-hand side by orders of magnitude and cancel.
  double log_scale = rhs.log_abs();
  if (!t1.is_zero()) log_scale = std::max(log_scale, t1.log_abs());
  if (!t2.is_zero()) log_scale = std::max(log_scale, t2.log_abs());
  return std::exp(diff.log_abs() - log_scale);
}

}  // namespace crr
