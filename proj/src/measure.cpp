#include "crr/measure.hpp"

#include <array>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "crr/core.hpp"

namespace crr {

ChainParams chain_params(double lambda, int k, int n_max) {
  if (!(lambda > 0.0) || k < 0 || n_max < 1)
    throw std::invalid_argument("chain_params: lambda > 0, k >= 0, n_max >= 1 required");
  ChainParams cp;
  cp.lambda = lambda;
  cp.k = k;
  cp.M.reserve(n_max);
  for (int n = 1; n <= n_max; ++n) {
    double M = (lambda <= 0.5)
                   ? 0.5 * (k + n - 1) / (lambda + k + n - 1)
                   : 0.5 * (2.0 * lambda + k + n - 2) / (lambda + k + n - 1);
    cp.M.push_back(M);
  }
  if (k == 0) {
    cp.m.reserve(n_max);
    for (int n = 1; n <= n_max; ++n)
      cp.m.push_back(0.5 * (n - 1) / (lambda + n - 1));
  }
  return cp;
}

std::complex<double> log_gamma(std::complex<double> z) {
  if (!(z.real() > 0.0)) throw std::invalid_argument("log_gamma: Re z > 0 required");
  static const double lanczos_p[9] = {
      0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
      771.32342877765313,   -176.61502916214059,   12.507343278686905,
      -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
  static const double half_log_2pi = 0.91893853320467274178;

  // Upward shifts improve the rational approximation for small Re z.
  std::complex<double> shift(0.0, 0.0);
  while (z.real() < 8.0) {
    shift += std::log(z);
    z += 1.0;
  }

  std::complex<double> zm = z - 1.0;
  std::complex<double> x = lanczos_p[0];
  for (int i = 1; i < 9; ++i) x += lanczos_p[i] / (zm + static_cast<double>(i));
  std::complex<double> t = zm + 7.5;
  return half_log_2pi + (zm + 0.5) * std::log(t) - t + std::log(x) - shift;
}

double log_gamma_abs_sq(const ParamB& b) {
  return 2.0 * log_gamma(std::complex<double>(b.lambda, b.eta)).real();
}

WeightK0 make_weight(const ParamB& b) {
  if (!(b.lambda > 0.5))
    throw std::invalid_argument("make_weight: lambda > 1/2 required for the explicit weight");
  double l = b.lambda, e = b.eta;
  double log_c = (2.0 * l - 1.0) * kLn2 + log_gamma_abs_sq(b) + e * M_PI -
                 std::lgamma(2.0 * l - 1.0) - std::log(2.0 * M_PI);
  return {b, log_c};
}

double weight_density(const WeightK0& w, double x) {
  double arccot = M_PI_2 - std::atan(x);  // continuous branch, range (0, pi)
  return std::exp(w.log_norm_const - 2.0 * w.b.eta * arccot -
                  w.b.lambda * std::log1p(x * x));
}

namespace {

// 16-point Gauss-Legendre nodes/weights on [-1, 1], generated once by
// Newton iteration on P_16.
struct Gauss16 {
  std::array<double, 16> x{};
  std::array<double, 16> w{};
  Gauss16() {
    const int n = 16;
    for (int i = 0; i < n / 2; ++i) {
      double t = std::cos(M_PI * (i + 0.75) / (n + 0.5));
      double dp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = t;
        for (int j = 2; j <= n; ++j) {
          double p2 = ((2.0 * j - 1.0) * t * p1 - (j - 1.0) * p0) / j;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (t * p1 - p0) / (t * t - 1.0);
        double dt = p1 / dp;
        t -= dt;
        if (std::abs(dt) < 1e-15) break;
      }
      x[i] = -t;
      x[n - 1 - i] = t;
      w[i] = w[n - 1 - i] = 2.0 / ((1.0 - t * t) * dp * dp);
    }
  }
};

const Gauss16& gauss16() {
  static const Gauss16 g;
  return g;
}

using Fn = std::function<double(double)>;

double gl16(const Fn& g, double a, double b) {
  const Gauss16& q = gauss16();
  double mid = 0.5 * (a + b), hw = 0.5 * (b - a);
  double s = 0.0;
  for (int i = 0; i < 16; ++i) s += q.w[i] * g(mid + hw * q.x[i]);
  return s * hw;
}

struct AdaptState {
  double abs_tol;
  int panels_used = 0;
  int panel_cap = 1 << 14;
  bool failed = false;
  double last_q1 = 0.0, last_q2 = 0.0;
};

double adapt(const Fn& g, double a, double b, double tol, int depth, AdaptState& st) {
  if (++st.panels_used > st.panel_cap) {
    st.failed = true;
    return gl16(g, a, b);
  }
  double q1 = gl16(g, a, b);
  double mid = 0.5 * (a + b);
  double q2 = gl16(g, a, mid) + gl16(g, mid, b);
  if (std::abs(q1 - q2) <= tol || depth >= 52) {
    if (std::abs(q1 - q2) > tol) {
      st.failed = true;
      st.last_q1 = q1;
      st.last_q2 = q2;
    }
    return q2;
  }
  return adapt(g, a, mid, 0.5 * tol, depth + 1, st) +
         adapt(g, mid, b, 0.5 * tol, depth + 1, st);
}

}  // namespace

double integrate(const WeightK0& w, const std::function<double(double)>& f) {
  const double l = w.b.lambda, e = w.b.eta, c = w.log_norm_const;
  // x = sinh(s): the integrand decays like exp(-(2*lambda-1)|s|) times the
  // growth of f, and the lambda < 1 endpoint singularity of the theta map
  // disappears entirely.
  Fn g = [&](double s) {
    double x = std::sinh(s);
    double logcosh = std::abs(s) + std::log1p(std::exp(-2.0 * std::abs(s))) - kLn2;
    double arccot = M_PI_2 - std::atan(x);
    double wgt = std::exp(c - 2.0 * e * arccot + (1.0 - 2.0 * l) * logcosh);
    return f(x) * wgt;
  };

  // Coarse L1 estimate sets the absolute tolerance; the signed total can
  // cancel to zero (orthogonality integrands) and is no use as a scale.
  Fn gabs = [&](double s) { return std::abs(g(s)); };
  double rough = 0.0;
  for (double a = -40.0; a < 40.0; a += 2.0) rough += gl16(gabs, a, a + 2.0);
  double abs_tol = std::max(rough * 1e-10, 1e-280);

  AdaptState st;
  st.abs_tol = abs_tol;
  double total = 0.0;
  for (double a = -2.0; a < 2.0; a += 1.0)
    total += adapt(g, a, a + 1.0, 0.1 * abs_tol, 0, st);

  // Extend outward until panels are negligible.
  for (int dir = -1; dir <= 1; dir += 2) {
    int quiet = 0;
    for (int i = 1; i <= 180 && quiet < 2; ++i) {
      double a = dir * (2.0 * i), b = dir * (2.0 * i + 2.0);
      double part = adapt(g, std::min(a, b), std::max(a, b), 0.05 * abs_tol, 0, st);
      total += part;
      quiet = (std::abs(part) < 0.01 * abs_tol) ? quiet + 1 : 0;
    }
    if (quiet < 2) st.failed = true;
  }

  if (st.failed) {
    std::ostringstream os;
    os << "integrate: quadrature did not converge; last two estimates " << st.last_q1
       << " and " << st.last_q2 << " (total " << total << ")";
    throw std::runtime_error(os.str());
  }
  return total;
}

VerblunskySeq verblunsky_seq(const ParamB& b, int k, int n_max) {
  bool admissible = (k == 0 && b.lambda > 0.5) || (k >= 1 && b.lambda > 0.0);
  if (!admissible)
    throw std::invalid_argument(
        "verblunsky_seq: requires k = 0 with lambda > 1/2, or k >= 1 with lambda > 0");
  if (n_max < 1) throw std::invalid_argument("verblunsky_seq: n_max >= 1 required");

  ChainParams cp = chain_params(b.lambda, k, n_max);
  VerblunskySeq vs{b, k, {}, {}, {}};
  vs.tau.reserve(n_max + 1);
  vs.beta.reserve(n_max);
  vs.gamma.reserve(n_max + 1);
  vs.tau.push_back({1.0, 0.0});
  vs.gamma.push_back(1.0);
  for (int n = 1; n <= n_max; ++n) {
    double cn = coeff_c(k + n, b);
    std::complex<double> ic(0.0, cn);
    vs.beta.push_back((1.0 - cp.M[n - 1] - ic) / ((1.0 - ic) * vs.tau[n - 1]));
    vs.tau.push_back(vs.tau[n - 1] * (1.0 - ic) / (1.0 + ic));
    vs.gamma.push_back((1.0 - cp.M[n - 1]) * vs.gamma[n - 1]);
  }
  return vs;
}

double orthogonality_check(int n, const ParamB& b) {
  if (n < 0) throw std::invalid_argument("orthogonality_check: n >= 0 required");
  WeightK0 w = make_weight(b);
  double gamma_n = 1.0;
  {
    ChainParams cp = chain_params(b.lambda, 0, std::max(n, 1));
    for (int j = 1; j <= n; ++j) gamma_n *= 1.0 - cp.M[j - 1];
  }

  double worst = 0.0;
  for (int j = 0; j <= n; ++j) {
    auto f = [&](double x) {
      EvalRecord r = eval_crr(n, 0, b, x);
      if (r.p.is_zero()) return 0.0;
      double lg = r.p.log_abs() - n * std::log1p(x * x);
      if (j > 0) {
        if (x == 0.0) return 0.0;
        lg += j * std::log(std::abs(x));
      }
      double sgn = r.p.sign() * ((j % 2 == 1 && x < 0.0) ? -1.0 : 1.0);
      return sgn * std::exp(lg);
    };
    double val = integrate(w, f);
    double expect = (j == n) ? gamma_n : 0.0;
    worst = std::max(worst, std::abs(val - expect) / gamma_n);
  }
  return worst;
}

double associated_integral_check(int n, const ParamB& b) {
  if (n < 1) throw std::invalid_argument("associated_integral_check: n >= 1 required");
  WeightK0 w = make_weight(b);
  double M1 = chain_params(b.lambda, 0, 1).M[0];
  const double probes[5] = {-1.2, -0.5, 0.0, 0.7, 1.5};

  // P_n^{(1)} has the divided-difference representation against the degree
  // n+1 polynomial of the base family.
  const int m = n + 1;
  double worst = 0.0;
  for (double x : probes) {
    EvalRecord rx = eval_crr(m, 0, b, x, true);
    double px = rx.p.value();
    double dpx = rx.dp.value();
    double log1px = std::log1p(x * x);

    auto g = [&](double t) {
      if (std::abs(t - x) < 1e-7 * (1.0 + std::abs(x))) {
        // limit of the divided difference at t = x
        return (dpx - 2.0 * m * x * px / (1.0 + x * x)) / M1;
      }
      EvalRecord rt = eval_crr(m, 0, b, t);
      double at = 0.0;
      if (!rt.p.is_zero())
        at = rt.p.sign() *
             std::exp(rt.p.log_abs() + m * (log1px - std::log1p(t * t)));
      return (at - px) / (M1 * (t - x));
    };

    double rhs = integrate(w, g);
    double lhs = eval_crr(n, 1, b, x).p.value();
    worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
  }
  return worst;
}

}  // namespace crr
