#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "crr/analysis.hpp"
#include "crr/core.hpp"

using namespace crr;

TEST_CASE("sturm-liouville form at theta = 0") {
  for (auto [l, e] : {std::pair{2.0, 1.0}, {0.8, -3.0}})
    for (int n : {4, 11}) {
      ParamB b(l, e);
      CHECK(sl_lambda(n, b, 0.0) ==
            doctest::Approx(n * n + 2 * n * l + l - e * e).epsilon(1e-14));
      CHECK(sl_v(n, b, 0.0).value() ==
            doctest::Approx(eval_crr(n, 0, b, 0.0).p.value()).epsilon(1e-13));
    }
}

TEST_CASE("v changes sign n times") {
  int n = 9;
  ParamB b(1.5, 2.0);
  int changes = 0;
  double prev = sl_v(n, b, -M_PI_2 + 0.01).sign();
  for (double th = -M_PI_2 + 0.01; th < M_PI_2 - 0.005; th += 0.002) {
    double s = sl_v(n, b, th).sign();
    if (s != 0 && s != prev) {
      ++changes;
      prev = s;
    }
  }
  CHECK(changes == n);
}

TEST_CASE("convexity verdicts, symmetric case") {
  // eta = 0, lambda > 1: negative zeros concave, positive convex
  ConvexityReport rep = convexity_report(8, ParamB(2.0, 0.0));
  REQUIRE(!rep.verdicts.empty());
  for (const RangeVerdict& v : rep.verdicts)
    if (v.claim != "no claim") CHECK(v.pass);
}

TEST_CASE("convexity verdicts, shifted case") {
  ConvexityReport rep = convexity_report(8, ParamB(2.0, 1.0));
  CHECK(rep.frak_M == doctest::Approx(1.0 * (8 + 2) / (2.0 * 1.0)));
  for (const RangeVerdict& v : rep.verdicts)
    if (v.claim != "no claim") CHECK(v.pass);
}

TEST_CASE("convexity at lambda = 1") {
  ConvexityReport rep = convexity_report(8, ParamB(1.0, 2.0));
  for (const RangeVerdict& v : rep.verdicts)
    if (v.claim != "no claim") CHECK(v.pass);
}

TEST_CASE("spacing bounds by case") {
  SpacingResult ii = spacing_check(10, ParamB(1.5, 0.7));
  CHECK(ii.applicable);
  CHECK(ii.case_label == "II");
  CHECK(ii.pass);

  SpacingResult i = spacing_check(10, ParamB(0.5, 0.3));
  CHECK(i.applicable);
  CHECK(i.case_label == "I");
  CHECK(i.pass);

  SpacingResult iii = spacing_check(5, ParamB(1.0, 2.0));
  CHECK(iii.applicable);
  CHECK(iii.case_label == "III");
  CHECK(iii.pass);

  // hypothesis violated: not applicable, not a failure
  CHECK(!spacing_check(10, ParamB(0.5, 2.0)).applicable);
}

TEST_CASE("uniform theta spacing at lambda = 1, eta = 0") {
  SpacingResult r = spacing_check(12, ParamB(1.0, 0.0));
  CHECK(r.applicable);
  CHECK(r.bound == doctest::Approx(M_PI / 13.0).epsilon(1e-12));
  CHECK(std::abs(r.min_margin) < 1e-12);  // gaps equal the bound exactly
  CHECK(r.pass);
}

TEST_CASE("density probe") {
  DensityResult d0 = density_probe(ParamB(1.0, 0.0), -1.0, 1.0, 0.2);
  CHECK(d0.achieved);
  CHECK(d0.n <= 32);

  DensityResult d1 = density_probe(ParamB(2.0, 1.0), -2.0, 2.0, 0.05);
  CHECK(d1.achieved);

  CHECK_THROWS_AS(density_probe(ParamB(0.5, 0.0), -1.0, 1.0, 0.1),
                  std::invalid_argument);
}

TEST_CASE("asymptotic slopes") {
  SlopeFit lf = lambda_branch_slope(6, 1.0, {1e2, 1e3, 1e4, 1e5});
  CHECK(lf.slope == doctest::Approx(-1.5).epsilon(0.07));

  SlopeFit ef = eta_branch_slope(6, 1.5, {1e2, 1e3, 1e4, 1e5});
  CHECK(ef.slope == doctest::Approx(-1.0).epsilon(0.15));

  CHECK_THROWS_AS(lambda_branch_slope(6, 1.0, {1e2, 1e3}), std::invalid_argument);
}

TEST_CASE("n = 2 closed-form error ratio") {
  // eta = 0: zeros +-1/sqrt(2 lambda + 1), predicted +-1/sqrt(2 lambda);
  // error scales as lambda^{-3/2}, so quadrupling lambda divides it by 8
  auto err = [](double l) {
    return std::abs(1.0 / std::sqrt(2 * l + 1) - 1.0 / std::sqrt(2 * l));
  };
  double ratio = err(100.0) / err(400.0);
  CHECK(ratio == doctest::Approx(8.0).epsilon(0.05));

  SlopeFit lf = lambda_branch_slope(2, 0.0, {100.0, 400.0, 1600.0, 6400.0});
  CHECK(lf.errors[0] / lf.errors[1] == doctest::Approx(8.0).epsilon(0.05));
}

TEST_CASE("expansion sups stay bounded as the parameter grows") {
  double prev = hermite_expansion_sup(4, 1.0, 64.0);
  for (double l : {128.0, 256.0, 512.0}) {
    double cur = hermite_expansion_sup(4, 1.0, l);
    CHECK(cur < 2.5 * prev);
    prev = cur;
  }
  prev = laguerre_expansion_sup(4, 1.5, 64.0);
  for (double e : {128.0, 256.0, 512.0}) {
    double cur = laguerre_expansion_sup(4, 1.5, e);
    CHECK(cur < 2.5 * prev);
    prev = cur;
  }
}
