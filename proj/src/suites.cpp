#include "crr/suites.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <random>
#include <sstream>

#include "crr/analysis.hpp"
#include "crr/classical.hpp"
#include "crr/core.hpp"
#include "crr/measure.hpp"
#include "crr/rational_oracle.hpp"
#include "crr/zeros.hpp"

namespace crr {

namespace {

struct Check {
  bool ok = true;
  int count = 0;
  std::ostringstream bad;

  void expect(bool cond, const std::string& what) {
    ++count;
    if (!cond) {
      if (!ok) bad << "; ";
      ok = false;
      bad << what;
    }
  }
};

SuiteResult finish(const std::string& name, Check& c,
                   std::chrono::steady_clock::time_point t0) {
  SuiteResult r;
  r.name = name;
  r.pass = c.ok;
  std::ostringstream os;
  os << c.count << " checks";
  if (!c.ok) os << "; FAILED: " << c.bad.str();
  r.detail = os.str();
  r.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

const std::vector<double> kLambdaGrid = {0.75, 1.0, 1.5, 5.0, 25.0};
const std::vector<double> kEtaGrid = {-5.0, 0.0, 2.0, 15.0};

}  // namespace

SuiteResult suite_interlacing_containment() {
  auto t0 = std::chrono::steady_clock::now();
  Check c;
  for (double l : kLambdaGrid) {
    for (double e : kEtaGrid) {
      ParamB b(l, e);
      std::ostringstream tag;
      tag << "(lambda=" << l << ", eta=" << e << ")";
      try {
        // crr_zeros asserts strict interlacing at every intermediate degree.
        ZeroSet zs = crr_zeros(200, 0, b);
        ExtremeBounds eb = extreme_bounds(200, b);
        bool inside = true;
        for (double x : zs.zeros)
          if (!(x > eb.lower && x < eb.upper)) inside = false;
        c.expect(inside, "containment at n=200 " + tag.str());
        bool increasing = true;
        for (size_t i = 0; i + 1 < zs.zeros.size(); ++i)
          if (!(zs.zeros[i] < zs.zeros[i + 1])) increasing = false;
        c.expect(increasing && zs.zeros.size() == 200, "ordering " + tag.str());
      } catch (const std::exception& ex) {
        c.expect(false, std::string("construction threw ") + ex.what() + " " + tag.str());
      }
    }
  }
  return finish("interlacing+containment (n<=200)", c, t0);
}

SuiteResult suite_oracle_equivalence() {
  auto t0 = std::chrono::steady_clock::now();
  Check c;

  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> dn(1, 12);
  std::uniform_real_distribution<double> dl(0.1, 30.0), de(-10.0, 10.0), dx(-20.0, 20.0);
  for (int it = 0; it < 100; ++it) {
    int n = dn(rng);
    ParamB b(dl(rng), de(rng));
    double x = dx(rng);
    double r = rel_diff(char_poly_det(n, b, x), eval_crr(n, 0, b, x).p);
    std::ostringstream tag;
    tag << "det vs recurrence n=" << n << " rel=" << r;
    c.expect(r < 1e-10, tag.str());
  }

  // Exact rational expansion against the floating recurrence, n <= 8.
  struct RatCase {
    int num_l, den_l, num_e, den_e;
  };
  const RatCase cases[] = {{3, 2, 1, 2}, {1, 2, -1, 1}, {7, 3, 2, 5}, {5, 1, 0, 1}};
  const std::pair<int, int> xs[] = {{3, 10}, {-7, 4}, {2, 1}, {9, 7}};
  for (const RatCase& rc : cases) {
    Rational l(rc.num_l, rc.den_l), e(rc.num_e, rc.den_e);
    ParamB b(static_cast<double>(l), static_cast<double>(e));
    for (int n = 1; n <= 8; ++n) {
      std::vector<Rational> coeffs = crr_poly_coeffs(n, 0, l, e);
      for (auto [xn, xd] : xs) {
        Rational x(xn, xd);
        double exact = static_cast<double>(eval_rational_poly(coeffs, x));
        double fl = eval_crr(n, 0, b, static_cast<double>(x)).p.value();
        double rel = std::abs(fl - exact) / std::max(std::abs(exact), 1e-300);
        std::ostringstream tag;
        tag << "rational oracle n=" << n << " x=" << xn << "/" << xd << " rel=" << rel;
        c.expect(rel < 1e-12, tag.str());
      }
    }
  }
  return finish("oracle equivalence", c, t0);
}

SuiteResult suite_identities() {
  auto t0 = std::chrono::steady_clock::now();
  Check c;

  const std::pair<double, double> params[] = {{1.5, 0.5}, {2.5, -1.0}, {0.8, 3.0}};
  const double sample_x[] = {-2.2, -0.5, 0.3, 1.7};

  for (auto [l, e] : params) {
    ParamB b(l, e);
    for (int n : {1, 5, 12, 20})
      for (int k : {0, 2, 5})
        for (double x : sample_x) {
          double r = wronskian_check(n, k, b, x);
          std::ostringstream tag;
          tag << "wronskian n=" << n << " k=" << k << " res=" << r;
          c.expect(r < 1e-10, tag.str());
        }
    for (int n : {1, 6, 17, 30, 50})
      for (double x : {-3.3, -0.7, 0.0, 1.1, 2.0}) {
        double r = ode_residual(n, b, x);
        std::ostringstream tag;
        tag << "ode n=" << n << " x=" << x << " res=" << r;
        c.expect(r < 1e-9, tag.str());
      }
  }

  for (double l : {0.3, 0.75, 1.0, 1.5, 5.0, 25.0})
    for (int k : {0, 1, 3, 5}) {
      ChainParams cp = chain_params(l, k, 101);
      for (int n = 1; n <= 100; ++n) {
        double lhs = (1.0 - cp.M[n - 1]) * cp.M[n];
        double rhs = coeff_d(k + n + 1, l);
        std::ostringstream tag;
        tag << "chain identity lambda=" << l << " k=" << k << " n=" << n;
        c.expect(std::abs(lhs - rhs) <= 1e-14 * rhs, tag.str());
      }
    }

  for (auto [l, e] : params)
    for (int k : {0, 1, 4}) {
      if (k == 0 && !(l > 0.5)) continue;
      VerblunskySeq vs = verblunsky_seq(ParamB(l, e), k, 60);
      for (int n = 1; n <= 60; ++n) {
        std::ostringstream tag;
        tag << "verblunsky lambda=" << l << " eta=" << e << " k=" << k << " n=" << n;
        c.expect(std::abs(std::abs(vs.tau[n]) - 1.0) < 1e-12, "|tau|=1 " + tag.str());
        c.expect(std::abs(vs.beta[n - 1]) < 1.0, "|beta|<1 " + tag.str());
        c.expect(vs.gamma[n] > 0.0 && vs.gamma[n] < vs.gamma[n - 1],
                 "gamma decreasing " + tag.str());
      }
    }
  return finish("identity suites", c, t0);
}

SuiteResult suite_measure() {
  auto t0 = std::chrono::steady_clock::now();
  Check c;
  for (double l : {0.75, 1.0, 1.5, 3.0})
    for (double e : {-2.0, 0.0, 0.5, 2.0}) {
      WeightK0 w = make_weight(ParamB(l, e));
      double mass = integrate(w, [](double) { return 1.0; });
      std::ostringstream tag;
      tag << "mass lambda=" << l << " eta=" << e << " -> " << mass;
      c.expect(std::abs(mass - 1.0) < 1e-8, tag.str());
    }

  {
    WeightK0 w = make_weight(ParamB(1.0, 0.0));
    for (double x : {-7.0, -1.3, 0.0, 0.4, 2.0, 11.0}) {
      double cauchy = 1.0 / (M_PI * (1.0 + x * x));
      c.expect(std::abs(weight_density(w, x) - cauchy) < 1e-12 * cauchy,
               "cauchy density at x");
    }
  }

  const std::pair<double, double> params[] = {{1.5, 0.5}, {2.0, -1.0}};
  for (auto [l, e] : params) {
    ParamB b(l, e);
    for (int n = 0; n <= 6; ++n) {
      double r = orthogonality_check(n, b);
      std::ostringstream tag;
      tag << "orthogonality n=" << n << " lambda=" << l << " res=" << r;
      c.expect(r < 1e-6, tag.str());
    }
    for (int n = 1; n <= 4; ++n) {
      double r = associated_integral_check(n, b);
      std::ostringstream tag;
      tag << "associated n=" << n << " lambda=" << l << " res=" << r;
      c.expect(r < 1e-6, tag.str());
    }
  }
  return finish("measure suite", c, t0);
}

SuiteResult suite_asymptotics() {
  auto t0 = std::chrono::steady_clock::now();
  Check c;

  SlopeFit lam = lambda_branch_slope(6, 1.0, {1e2, 1e3, 1e4, 1e5});
  {
    std::ostringstream tag;
    tag << "lambda-branch slope " << lam.slope;
    c.expect(std::abs(lam.slope + 1.5) <= 0.1, tag.str());
  }
  SlopeFit eta = eta_branch_slope(6, 1.5, {1e2, 1e3, 1e4, 1e5});
  {
    std::ostringstream tag;
    tag << "eta-branch slope " << eta.slope;
    c.expect(std::abs(eta.slope + 1.0) <= 0.15, tag.str());
  }

  // Closed-form n = 2, eta = 0: zeros +-1/sqrt(2 lambda + 1), error ratio 8
  // when lambda is quadrupled.
  {
    auto err = [](double l) {
      return std::abs(1.0 / std::sqrt(2.0 * l) - 1.0 / std::sqrt(2.0 * l + 1.0));
    };
    double ratio = err(1e4) / err(4e4);
    std::ostringstream tag;
    tag << "n=2 closed-form ratio " << ratio;
    c.expect(std::abs(ratio - 8.0) <= 0.4, tag.str());
    // the solver reproduces the closed form
    std::vector<double> z = crr_zeros(2, 0, ParamB(1e4, 0.0)).zeros;
    c.expect(std::abs(z[1] - 1.0 / std::sqrt(2e4 + 1.0)) < 1e-12, "n=2 solver zero");
  }

  // Function-level expansions stay bounded under parameter doubling.
  {
    double prev = -1.0;
    bool bounded = true;
    for (double l : {256.0, 512.0, 1024.0, 2048.0}) {
      double s = hermite_expansion_sup(6, 1.0, l);
      if (prev > 0.0 && s > 2.5 * prev) bounded = false;
      prev = s;
    }
    c.expect(bounded, "hermite expansion sup*lambda bounded");
    prev = -1.0;
    bounded = true;
    for (double e : {256.0, 512.0, 1024.0, 2048.0}) {
      double s = laguerre_expansion_sup(6, 1.5, e);
      if (prev > 0.0 && s > 2.5 * prev) bounded = false;
      prev = s;
    }
    c.expect(bounded, "laguerre expansion sup*eta^2 bounded");
  }
  return finish("asymptotics suite", c, t0);
}

SuiteResult suite_electrostatics() {
  auto t0 = std::chrono::steady_clock::now();
  Check c;
  for (int n = 2; n <= 20; ++n) {
    double rh = stieltjes_residual(Family::Hermite, n);
    std::ostringstream tag;
    tag << "stieltjes hermite n=" << n << " res=" << rh;
    c.expect(rh < 1e-8, tag.str());
    for (double l : {0.8, 1.5, 3.0}) {
      double rl = stieltjes_residual(Family::Laguerre, n, l);
      std::ostringstream t2;
      t2 << "stieltjes laguerre n=" << n << " lambda=" << l << " res=" << rl;
      c.expect(rl < 1e-8, t2.str());
    }
  }
  for (int n = 2; n <= 12; ++n) {
    for (ElectroKind kind : {ElectroKind::T_hermite, ElectroKind::Ttilde_laguerre}) {
      ElectrostaticMatrix m = electrostatic_matrix(kind, n, 1.5);
      double norm = 0.0;
      for (double v : m.entries) norm += v * v;
      norm = std::sqrt(norm);
      double mn = electrostatic_psd(kind, n, 1.5);
      std::ostringstream tag;
      tag << "psd kind=" << (kind == ElectroKind::T_hermite ? "T" : "Ttilde")
          << " n=" << n << " min_eig=" << mn;
      c.expect(mn >= -1e-10 * norm, tag.str());
    }
  }
  return finish("electrostatics suite", c, t0);
}

SuiteResult suite_analysis_grid() {
  auto t0 = std::chrono::steady_clock::now();
  Check c;
  for (double l : {0.5, 1.0, 2.0, 5.0})
    for (double e : {-3.0, 0.0, 1.0, 4.0})
      for (int n : {6, 12, 24}) {
        ParamB b(l, e);
        ConvexityReport rep = convexity_report(n, b);
        for (const RangeVerdict& v : rep.verdicts) {
          std::ostringstream tag;
          tag << "convexity lambda=" << l << " eta=" << e << " n=" << n << " ["
              << v.range << " " << v.claim << "]";
          c.expect(v.pass, tag.str());
        }
        SpacingResult sp = spacing_check(n, b);
        if (sp.applicable) {
          std::ostringstream tag;
          tag << "spacing case " << sp.case_label << " lambda=" << l << " eta=" << e
              << " n=" << n << " margin=" << sp.min_margin;
          c.expect(sp.pass && sp.min_margin > -1e-12, tag.str());
        }
        // Lambda_n has its single critical point at arctan(frak_M)
        if (l != 1.0) {
          double thc = std::atan(frak_m(n, b));
          double h = 1e-4;
          double d1 = sl_lambda(n, b, thc + h) - sl_lambda(n, b, thc);
          double d2 = sl_lambda(n, b, thc) - sl_lambda(n, b, thc - h);
          // slope changes sign across the critical point
          c.expect(d1 * d2 <= 0.0, "critical point of Lambda_n");
        }
      }
  {
    DensityResult dr = density_probe(ParamB(2.0, 1.0), -2.0, 2.0, 0.05);
    c.expect(dr.achieved, "density probe (2,1)");
  }
  return finish("analysis grid", c, t0);
}

std::vector<SuiteResult> run_all_suites() {
  return {suite_interlacing_containment(), suite_oracle_equivalence(),
          suite_identities(), suite_measure(), suite_asymptotics(),
          suite_electrostatics(), suite_analysis_grid()};
}

}  // namespace crr
