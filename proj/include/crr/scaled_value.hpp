#pragma once

#include <cmath>
#include <cstdlib>

namespace crr {

inline constexpr double kLn2 = 0.6931471805599453094;

/// Magnitude-safe real number: value = mantissa * 2^exp2.
/// Invariant: mantissa == 0 implies exp2 == 0, otherwise 0.5 <= |mantissa| < 1.
struct ScaledValue {
  double mantissa = 0.0;
  int exp2 = 0;

  static ScaledValue from(double v) {
    ScaledValue s;
    if (v != 0.0) s.mantissa = std::frexp(v, &s.exp2);
    return s;
  }

  /// value = exp(log_e) (log_e in natural log); stays finite for any log_e.
  static ScaledValue from_log(double log_e, int sign = 1) {
    double l2 = log_e / kLn2;
    double fl = std::floor(l2);
    ScaledValue s;
    s.mantissa = sign * std::exp2(l2 - fl) * 0.5;
    s.exp2 = static_cast<int>(fl) + 1;
    return s.normalized();
  }

  ScaledValue normalized() const {
    if (mantissa == 0.0) return {};
    int e = 0;
    double m = std::frexp(mantissa, &e);
    return {m, exp2 + e};
  }

  bool is_zero() const { return mantissa == 0.0; }
  int sign() const { return (mantissa > 0.0) - (mantissa < 0.0); }

  /// May overflow to +-inf when exp2 is large; fine for comparisons.
  double value() const { return std::ldexp(mantissa, exp2); }

  /// Natural log of |value|; -inf for zero.
  double log_abs() const { return std::log(std::abs(mantissa)) + exp2 * kLn2; }

  ScaledValue operator-() const { return {-mantissa, exp2}; }

  friend ScaledValue operator*(const ScaledValue& a, const ScaledValue& b) {
    if (a.is_zero() || b.is_zero()) return {};
    ScaledValue s{a.mantissa * b.mantissa, a.exp2 + b.exp2};
    return s.normalized();
  }

  friend ScaledValue operator*(const ScaledValue& a, double d) {
    return a * ScaledValue::from(d);
  }

  friend ScaledValue operator+(const ScaledValue& a, const ScaledValue& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const ScaledValue& hi = (a.exp2 >= b.exp2) ? a : b;
    const ScaledValue& lo = (a.exp2 >= b.exp2) ? b : a;
    int shift = hi.exp2 - lo.exp2;
    if (shift > 1100) return hi;
    ScaledValue s{hi.mantissa + std::ldexp(lo.mantissa, -shift), hi.exp2};
    return s.normalized();
  }

  friend ScaledValue operator-(const ScaledValue& a, const ScaledValue& b) {
    return a + (-b);
  }
};

/// |a-b| / max(|a|,|b|); 0 when both are zero.
inline double rel_diff(const ScaledValue& a, const ScaledValue& b) {
  if (a.is_zero() && b.is_zero()) return 0.0;
  ScaledValue d = a - b;
  if (d.is_zero()) return 0.0;
  double ref = std::max(a.log_abs(), b.log_abs());
  return std::exp(d.log_abs() - ref);
}

}  // namespace crr
