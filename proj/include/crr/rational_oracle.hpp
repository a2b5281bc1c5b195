#pragma once

// Exact rational-arithmetic expansion of the polynomial coefficients for
// rational (lambda, eta) and small n.  Cross-check only; the floating
// recurrence in core.cpp is the production path.

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace crr {

using Rational = boost::multiprecision::cpp_rational;

/// Coefficients of P_n^{(k)}(b;x) in ascending powers of x, exact.
inline std::vector<Rational> crr_poly_coeffs(int n, int k, const Rational& lambda,
                                             const Rational& eta) {
  // Explicit return types force evaluation of the boost expression
  // templates before locals go out of scope.
  auto cc = [&](int j) -> Rational { return eta / (lambda + (j - 1)); };
  auto dd = [&](int j) -> Rational {
    Rational m = j - 1;
    return m * (m + 2 * lambda - 1) / (4 * (m + lambda - 1) * (m + lambda));
  };

  std::vector<Rational> prev{1};                 // P_0
  if (n == 0) return prev;
  std::vector<Rational> cur{-cc(k + 1), 1};      // P_1
  for (int m = 1; m < n; ++m) {
    Rational c = cc(k + m + 1), d = dd(k + m + 1);
    std::vector<Rational> next(m + 2, Rational(0));
    for (int i = 0; i <= m; ++i) {
      next[i + 1] += cur[i];
      next[i] -= c * cur[i];
    }
    for (int i = 0; i < m; ++i) {
      next[i + 2] -= d * prev[i];
      next[i] -= d * prev[i];
    }
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

inline Rational eval_rational_poly(const std::vector<Rational>& coeffs, const Rational& x) {
  Rational acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace crr
