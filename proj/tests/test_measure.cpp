#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "crr/core.hpp"
#include "crr/measure.hpp"

using namespace crr;

TEST_CASE("chain parameter sequences") {
  // lambda = 1: M_n = 1/2 for every n
  ChainParams cp1 = chain_params(1.0, 0, 20);
  for (double M : cp1.M) CHECK(M == doctest::Approx(0.5));

  // (1 - M_n) M_{n+1} = d_{k+n+1}
  for (double l : {0.3, 0.5, 0.8, 3.0})
    for (int k : {0, 1, 4}) {
      ChainParams cp = chain_params(l, k, 40);
      for (int n = 1; n < 40; ++n) {
        double lhs = (1.0 - cp.M[n - 1]) * cp.M[n];
        double rhs = coeff_d(k + n + 1, l);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-14));
      }
    }

  // minimal sequence only defined for k = 0
  CHECK(chain_params(2.0, 1, 5).m.empty());
  CHECK(chain_params(2.0, 0, 5).m[0] == 0.0);
}

TEST_CASE("complex log gamma identities") {
  // |Gamma(1 + i eta)|^2 = pi eta / sinh(pi eta)
  for (double e : {0.5, 2.0, 10.0}) {
    double got = log_gamma_abs_sq(ParamB(1.0, e));
    double want = std::log(M_PI * e / std::sinh(M_PI * e));
    CHECK(got == doctest::Approx(want).epsilon(1e-13));
    // |Gamma(1/2 + i eta)|^2 = pi / cosh(pi eta)
    double got2 = log_gamma_abs_sq(ParamB(0.5, e));
    double want2 = std::log(M_PI / std::cosh(M_PI * e));
    CHECK(got2 == doctest::Approx(want2).epsilon(1e-13));
  }
  CHECK_THROWS_AS(log_gamma({-1.0, 0.0}), std::invalid_argument);
}

TEST_CASE("weight reduces to Cauchy at lambda = 1, eta = 0") {
  WeightK0 w = make_weight(ParamB(1.0, 0.0));
  for (double x : {-8.0, -1.0, 0.0, 0.5, 20.0}) {
    double want = 1.0 / (M_PI * (1.0 + x * x));
    CHECK(weight_density(w, x) == doctest::Approx(want).epsilon(1e-12));
  }
  CHECK_THROWS_AS(make_weight(ParamB(0.5, 1.0)), std::invalid_argument);
}

TEST_CASE("weight has unit mass") {
  for (auto [l, e] : {std::pair{0.75, 2.0}, {1.0, -2.0}, {1.5, 0.5}, {3.0, 0.0}}) {
    WeightK0 w = make_weight(ParamB(l, e));
    double mass = integrate(w, [](double) { return 1.0; });
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-8));
  }
}

TEST_CASE("verblunsky coefficients") {
  // lambda = 1, eta = 0: beta_n = 1/2, gamma_n = 2^{-n}
  VerblunskySeq vs = verblunsky_seq(ParamB(1.0, 0.0), 0, 10);
  for (int n = 0; n < 10; ++n) {
    CHECK(vs.beta[n].real() == doctest::Approx(0.5));
    CHECK(vs.beta[n].imag() == doctest::Approx(0.0));
    CHECK(vs.gamma[n + 1] == doctest::Approx(std::pow(2.0, -(n + 1))));
  }

  VerblunskySeq v2 = verblunsky_seq(ParamB(2.5, 3.0), 0, 30);
  double prev = 2.0;
  for (int n = 1; n <= 30; ++n) {
    CHECK(std::abs(v2.tau[n]) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(v2.beta[n - 1]) < 1.0);
    CHECK(v2.gamma[n] < prev);
    CHECK(v2.gamma[n] > 0.0);
    prev = v2.gamma[n];
  }

  // hypothesis: k = 0 needs lambda > 1/2
  CHECK_THROWS_AS(verblunsky_seq(ParamB(0.4, 1.0), 0, 5), std::invalid_argument);
  CHECK_NOTHROW(verblunsky_seq(ParamB(0.4, 1.0), 1, 5));
}

TEST_CASE("orthogonality of the polynomials against the weight") {
  CHECK(orthogonality_check(3, ParamB(1.5, 0.5)) < 1e-6);
  CHECK(orthogonality_check(5, ParamB(2.0, -1.0)) < 1e-6);
}

TEST_CASE("first-associated integral representation") {
  CHECK(associated_integral_check(1, ParamB(1.5, 0.0)) < 1e-6);
  CHECK(associated_integral_check(1, ParamB(1.5, 0.5)) < 1e-6);
  CHECK(associated_integral_check(4, ParamB(2.0, 1.0)) < 1e-6);
}
