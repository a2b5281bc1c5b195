#include "crr/zeros.hpp"

#include <cmath>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace crr {

double zeros_tolerance() {
  static const double tol = [] {
    if (const char* env = std::getenv("CRR_ZEROS_TOL")) {
      char* end = nullptr;
      double v = std::strtod(env, &end);
      if (end != env && v > 0.0 && v < 1.0) return v;
    }
    return 1e-13;
  }();
  return tol;
}

ExtremeBounds extreme_bounds(int n, const ParamB& b) {
  if (n < 4) throw std::invalid_argument("extreme_bounds: n >= 4 required");
  double l = b.lambda, e = b.eta;
  double delta = (e * e + l * (l + 2.0)) * n * n +
                 2.0 * l * (e * e + l * l + 2.0 * l - 3.0) * n +
                 4.0 * l * (e * e + (l - 1.0) * (l - 1.0));
  double num = e * (n * (double)n + 2.0 * l + n * (l - 1.0));
  double den = l * (2.0 * (n - 1.0) + (n + 2.0) * l);
  double root = (n - 1.0) * std::sqrt(delta);
  return {n, (num - root) / den, (num + root) / den, delta};
}

namespace {

struct PolyVal {
  ScaledValue p;
  ScaledValue dp;
};

// Value and derivative of one of the three families at a given degree.
// Carries its own scaled recurrence so no overflow for any (degree, x).
class FamilyEval {
 public:
  FamilyEval(Family f, int k, double lambda, double eta, double alpha)
      : f_(f), k_(k), lambda_(lambda), eta_(eta), alpha_(alpha) {}

  PolyVal operator()(int m, double x) const {
    switch (f_) {
      case Family::CRR: {
        ParamB b(lambda_, eta_);
        EvalRecord r = eval_crr(m, k_, b, x);
        return {r.p, r.dp};
      }
      case Family::Hermite:
        return hermite(m, x);
      case Family::Laguerre:
        return laguerre(m, x);
    }
    return {};
  }

  double first_zero() const {
    switch (f_) {
      case Family::CRR:
        return eta_ / (lambda_ + k_);
      case Family::Hermite:
        return 0.0;
      case Family::Laguerre:
        return alpha_ + 1.0;
    }
    return 0.0;
  }

 private:
  static PolyVal hermite(int m, double x) {
    double p = 2.0 * x, pp = 1.0, dp = 2.0, dpp = 0.0;
    int scale = 0;
    if (m == 0) return {ScaledValue::from(1.0), {}};
    for (int j = 1; j < m; ++j) {
      double np = 2.0 * x * p - 2.0 * j * pp;
      double ndp = 2.0 * p + 2.0 * x * dp - 2.0 * j * dpp;
      pp = p;
      p = np;
      dpp = dp;
      dp = ndp;
      renorm4(p, pp, dp, dpp, scale);
    }
    return packed(p, dp, scale);
  }

  PolyVal laguerre(int m, double x) const {
    double a = alpha_;
    double p = a + 1.0 - x, pp = 1.0, dp = -1.0, dpp = 0.0;
    int scale = 0;
    if (m == 0) return {ScaledValue::from(1.0), {}};
    for (int j = 1; j < m; ++j) {
      double u = 2.0 + (a - 1.0 - x) / (j + 1.0);
      double v = 1.0 + (a - 1.0) / (j + 1.0);
      double np = u * p - v * pp;
      double ndp = u * dp - p / (j + 1.0) - v * dpp;
      pp = p;
      p = np;
      dpp = dp;
      dp = ndp;
      renorm4(p, pp, dp, dpp, scale);
    }
    return packed(p, dp, scale);
  }

  static void renorm4(double& p, double& pp, double& dp, double& dpp, int& scale) {
    double m = std::max(std::max(std::abs(p), std::abs(pp)),
                        std::max(std::abs(dp), std::abs(dpp)));
    if (m == 0.0) return;
    int e = 0;
    std::frexp(m, &e);
    if (e == 0) return;
    double f = std::ldexp(1.0, -e);
    p *= f;
    pp *= f;
    dp *= f;
    dpp *= f;
    scale += e;
  }

  static PolyVal packed(double p, double dp, int scale) {
    ScaledValue sp = ScaledValue::from(p);
    if (!sp.is_zero()) sp.exp2 += scale;
    ScaledValue sdp = ScaledValue::from(dp);
    if (!sdp.is_zero()) sdp.exp2 += scale;
    return {sp, sdp};
  }

  Family f_;
  int k_;
  double lambda_, eta_, alpha_;
};

[[noreturn]] void bracket_failure(const char* what, int degree, double a, double b) {
  std::ostringstream os;
  os << "zero solver bracket failure (" << what << ") at degree " << degree
     << ", interval [" << a << ", " << b << "]";
  throw std::runtime_error(os.str());
}

int sign_at(const FamilyEval& ev, int m, double x) { return ev(m, x).p.sign(); }

double bisect_refine(const FamilyEval& ev, int m, double a, double b, int sa) {
  double tol = zeros_tolerance();
  for (int it = 0; it < 220; ++it) {
    double mid = 0.5 * (a + b);
    if (mid <= a || mid >= b) break;
    double width_tol = tol * std::max(1.0, std::min(std::abs(a), std::abs(b)));
    if (b - a <= width_tol) break;
    int sm = sign_at(ev, m, mid);
    if (sm == 0) return mid;
    if (sm == sa)
      a = mid;
    else
      b = mid;
  }
  double root = 0.5 * (a + b);

  // Newton polish, at most 3 steps, rejected if it leaves the bracket.
  // In the theta domain for |x| > 10 where the x-derivative is ill scaled.
  for (int it = 0; it < 3; ++it) {
    PolyVal v = ev(m, root);
    if (v.p.is_zero()) break;
    if (v.dp.is_zero()) break;
    double step_log = v.p.log_abs() - v.dp.log_abs();
    double next;
    if (std::abs(root) > 10.0) {
      // d/dtheta P(tan theta) = P'(x) (1 + x^2)
      double dth = -v.p.sign() * v.dp.sign() *
                   std::exp(step_log - std::log1p(root * root));
      next = std::tan(std::atan(root) + dth);
    } else {
      next = root - v.p.sign() * v.dp.sign() * std::exp(step_log);
    }
    if (!(next > a && next < b) || !std::isfinite(next)) break;
    if (next == root) break;
    root = next;
  }
  return root;
}

double expand_left(const FamilyEval& ev, int m, double from, int s_inner) {
  double h = std::max(1.0, 0.5 * std::abs(from));
  double lo = from;
  for (int it = 0; it < 60; ++it) {
    lo = from - h;
    if (sign_at(ev, m, lo) != s_inner && sign_at(ev, m, lo) != 0) return lo;
    h *= 2.0;
  }
  bracket_failure("left outer expansion", m, lo, from);
}

double expand_right(const FamilyEval& ev, int m, double from, int s_inner) {
  double h = std::max(1.0, 0.5 * std::abs(from));
  double hi = from;
  for (int it = 0; it < 60; ++it) {
    hi = from + h;
    if (sign_at(ev, m, hi) != s_inner && sign_at(ev, m, hi) != 0) return hi;
    h *= 2.0;
  }
  bracket_failure("right outer expansion", m, from, hi);
}

std::vector<double> solve_by_interlacing(const FamilyEval& ev, int n, Family fam, int k,
                                         const ParamB* b) {
  std::vector<double> prev{ev.first_zero()};
  if (n == 1) return prev;

  for (int m = 2; m <= n; ++m) {
    std::vector<double> cur;
    cur.reserve(m);

    std::vector<int> s(prev.size());
    for (size_t i = 0; i < prev.size(); ++i) {
      s[i] = sign_at(ev, m, prev[i]);
      if (s[i] == 0) bracket_failure("degenerate interlacing point", m, prev[i], prev[i]);
      if (i > 0 && s[i] == s[i - 1])
        bracket_failure("sign agreement at consecutive brackets", m, prev[i - 1], prev[i]);
    }

    double lo, hi;
    bool have_bounds = (fam == Family::CRR && k == 0 && m >= 4);
    if (have_bounds) {
      ExtremeBounds eb = extreme_bounds(m, *b);
      lo = eb.lower;
      hi = eb.upper;
      if (sign_at(ev, m, lo) == s.front() || sign_at(ev, m, lo) == 0)
        lo = expand_left(ev, m, lo, s.front());
      if (sign_at(ev, m, hi) == s.back() || sign_at(ev, m, hi) == 0)
        hi = expand_right(ev, m, hi, s.back());
    } else {
      lo = expand_left(ev, m, prev.front(), s.front());
      hi = expand_right(ev, m, prev.back(), s.back());
    }

    int slo = sign_at(ev, m, lo);
    cur.push_back(bisect_refine(ev, m, lo, prev.front(), slo));
    for (size_t i = 0; i + 1 < prev.size(); ++i)
      cur.push_back(bisect_refine(ev, m, prev[i], prev[i + 1], s[i]));
    cur.push_back(bisect_refine(ev, m, prev.back(), hi, s.back()));

    // Strict interlacing with the previous degree, asserted during construction.
    for (size_t i = 0; i + 1 < cur.size(); ++i) {
      if (!(cur[i] < prev[i] && prev[i] < cur[i + 1]))
        bracket_failure("interlacing violation", m, cur[i], cur[i + 1]);
    }
    prev = std::move(cur);
  }
  return prev;
}

}  // namespace

ZeroSet crr_zeros(int n, int k, const ParamB& b) {
  if (n < 1 || k < 0) throw std::invalid_argument("crr_zeros: n >= 1, k >= 0 required");
  FamilyEval ev(Family::CRR, k, b.lambda, b.eta, 0.0);
  ZeroSet zs;
  zs.family = Family::CRR;
  zs.n = n;
  zs.k = k;
  zs.lambda = b.lambda;
  zs.eta = b.eta;
  zs.zeros = solve_by_interlacing(ev, n, Family::CRR, k, &b);
  return zs;
}

ZeroSet classical_zeros(Family family, int n, double alpha) {
  if (n < 1) throw std::invalid_argument("classical_zeros: n >= 1 required");
  if (family == Family::CRR)
    throw std::invalid_argument("classical_zeros: use crr_zeros for the CRR family");
  if (family == Family::Laguerre && !(alpha > -1.0))
    throw std::invalid_argument("classical_zeros: Laguerre requires alpha > -1");
  FamilyEval ev(family, 0, 0.0, 0.0, alpha);
  ZeroSet zs;
  zs.family = family;
  zs.n = n;
  zs.alpha = alpha;
  zs.zeros = solve_by_interlacing(ev, n, family, 0, nullptr);
  return zs;
}

ThetaZeroSet theta_transform(const ZeroSet& zs) {
  if (zs.family != Family::CRR)
    throw std::invalid_argument("theta_transform: CRR family required");
  ThetaZeroSet t;
  t.thetas.reserve(zs.zeros.size());
  for (double x : zs.zeros) t.thetas.push_back(std::atan(x));
  return t;
}

}  // namespace crr
