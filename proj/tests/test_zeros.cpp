#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "crr/zeros.hpp"

using namespace crr;

TEST_CASE("degree-1 and degree-2 closed forms") {
  CHECK(crr_zeros(1, 0, ParamB(2, 1)).zeros[0] == doctest::Approx(0.5));
  CHECK(crr_zeros(1, 4, ParamB(2, 1)).zeros[0] == doctest::Approx(1.0 / 6.0));

  // eta = 0, n = 2: x^2 = d_2/(1 - d_2), lambda = 1 gives +-1/sqrt(3)
  ZeroSet z2 = crr_zeros(2, 0, ParamB(1, 0));
  CHECK(z2.zeros[0] == doctest::Approx(-0.5773502691896258).epsilon(1e-12));
  CHECK(z2.zeros[1] == doctest::Approx(0.5773502691896258).epsilon(1e-12));
}

TEST_CASE("extreme bounds against published values") {
  ExtremeBounds eb = extreme_bounds(30, ParamB(5, 2));
  CHECK(std::abs(eb.lower - (-3.83491)) < 5e-5);
  CHECK(std::abs(eb.upper - 7.61473) < 5e-5);

  ExtremeBounds e0 = extreme_bounds(4, ParamB(1.5, 0));
  CHECK(e0.lower == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-12));
  CHECK(e0.upper == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));

  CHECK_THROWS_AS(extreme_bounds(3, ParamB(1, 0)), std::invalid_argument);
}

TEST_CASE("zeros interlace between consecutive degrees") {
  ParamB b(1.2, -3.0);
  ZeroSet z7 = crr_zeros(7, 0, b);
  ZeroSet z8 = crr_zeros(8, 0, b);
  for (int i = 0; i < 7; ++i) {
    CHECK(z8.zeros[i] < z7.zeros[i]);
    CHECK(z7.zeros[i] < z8.zeros[i + 1]);
  }
}

TEST_CASE("all zeros inside the bound interval") {
  for (auto [l, e] : {std::pair{0.75, 2.0}, {5.0, -1.0}, {1.0, 0.0}}) {
    ParamB b(l, e);
    ZeroSet zs = crr_zeros(10, 0, b);
    ExtremeBounds eb = extreme_bounds(10, b);
    CHECK(zs.zeros.front() > eb.lower);
    CHECK(zs.zeros.back() < eb.upper);
  }
}

TEST_CASE("zeros are actual roots") {
  ParamB b(2.0, 1.5);
  ZeroSet zs = crr_zeros(9, 0, b);
  for (double x : zs.zeros) {
    EvalRecord left = eval_crr(9, 0, b, x - 1e-7);
    EvalRecord right = eval_crr(9, 0, b, x + 1e-7);
    CHECK(left.p.sign() * right.p.sign() == -1);
  }
}

TEST_CASE("determinism") {
  ParamB b(0.9, 4.0);
  ZeroSet a = crr_zeros(25, 0, b);
  ZeroSet c = crr_zeros(25, 0, b);
  for (int i = 0; i < 25; ++i) CHECK(a.zeros[i] == c.zeros[i]);  // bitwise
}

TEST_CASE("theta transform") {
  ZeroSet zs = crr_zeros(12, 0, ParamB(1.5, 2.0));
  ThetaZeroSet th = theta_transform(zs);
  REQUIRE(th.thetas.size() == 12);
  for (size_t i = 0; i < 12; ++i) {
    CHECK(th.thetas[i] > -M_PI_2);
    CHECK(th.thetas[i] < M_PI_2);
    CHECK(std::tan(th.thetas[i]) == doctest::Approx(zs.zeros[i]).epsilon(1e-12));
  }
}

TEST_CASE("classical families") {
  ZeroSet h3 = classical_zeros(Family::Hermite, 3);
  CHECK(h3.zeros[0] == doctest::Approx(-1.224744871391589).epsilon(1e-12));
  CHECK(h3.zeros[1] == doctest::Approx(0.0));
  CHECK(h3.zeros[2] == doctest::Approx(1.224744871391589).epsilon(1e-12));

  ZeroSet l1 = classical_zeros(Family::Laguerre, 1, 2.0);
  CHECK(l1.zeros[0] == doctest::Approx(3.0).epsilon(1e-12));

  ZeroSet l5 = classical_zeros(Family::Laguerre, 5, 0.5);
  for (double x : l5.zeros) CHECK(x > 0.0);
}

TEST_CASE("associated zeros shift with k") {
  // k-shift reindexes the coefficients, zeros move but stay real and simple
  ParamB b(1.5, 1.0);
  ZeroSet zs = crr_zeros(6, 3, b);
  for (int i = 0; i + 1 < 6; ++i) CHECK(zs.zeros[i] < zs.zeros[i + 1]);
}
