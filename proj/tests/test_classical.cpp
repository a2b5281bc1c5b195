#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "crr/classical.hpp"

using namespace crr;

TEST_CASE("classical evaluation spot values") {
  CHECK(classical_eval(Family::Hermite, 2, 0, 0.0).value() == doctest::Approx(-2.0));
  CHECK(classical_eval(Family::Hermite, 3, 0, 1.0).value() == doctest::Approx(-4.0));
  // L_1^{(a)}(x) = 1 + a - x
  CHECK(classical_eval(Family::Laguerre, 1, 2.0, 1.0).value() == doctest::Approx(2.0));
  CHECK(classical_eval(Family::Laguerre, 2, 0.0, 0.0).value() == doctest::Approx(1.0));
}

TEST_CASE("stieltjes systems at the computed zeros") {
  for (int n : {2, 5, 10, 20}) {
    CHECK(stieltjes_residual(Family::Hermite, n) < 1e-8);
    CHECK(stieltjes_residual(Family::Laguerre, n, 1.5) < 1e-8);
    CHECK(stieltjes_residual(Family::Laguerre, n, 0.75) < 1e-8);
  }
}

TEST_CASE("T matrix for n = 2 has eigenvalues {0, 2/gap^2}") {
  ElectrostaticMatrix t = electrostatic_matrix(ElectroKind::T_hermite, 2);
  // zeros +-1/sqrt(2), gap sqrt(2)
  double g2 = 2.0;  // gap^2
  CHECK(t.entries[0] == doctest::Approx(1.0 / g2).epsilon(1e-10));
  CHECK(t.entries[1] == doctest::Approx(-1.0 / g2).epsilon(1e-10));
  double lo = symmetric_min_eigenvalue(t.entries, 2);
  CHECK(std::abs(lo) < 1e-12);
}

TEST_CASE("positive semidefiniteness certificates") {
  for (int n : {2, 4, 8, 12}) {
    double frob_scale = 1.0;  // entries are O(1) after scaling
    CHECK(electrostatic_psd(ElectroKind::T_hermite, n) >= -1e-10 * frob_scale);
    CHECK(electrostatic_psd(ElectroKind::Ttilde_laguerre, n, 2.0) >= -1e-10);
  }
  // LDL^T path
  CHECK(electrostatic_psd(ElectroKind::T_hermite, 40) >= -1e-10);
}

TEST_CASE("jacobi eigenvalue solver on a known matrix") {
  // [[2,1],[1,2]] has eigenvalues 1 and 3
  std::vector<double> a{2, 1, 1, 2};
  CHECK(symmetric_min_eigenvalue(a, 2) == doctest::Approx(1.0).epsilon(1e-12));
}
