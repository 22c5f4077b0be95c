#pragma once

// Test-only reference implementations of the G kernel. None of these share
// code with the library's composite Gauss-Legendre path.

#include <cmath>
#include <numbers>

namespace qfriction::oracle {

// K_nu(x) = int_0^inf exp(-x cosh t) cosh(nu t) dt by the trapezoid rule,
// which converges geometrically for this analytic, doubly-decaying integrand.
inline double bessel_k_trapezoid(int nu, double x) {
  const double h = 1.0 / 64.0;
  double sum = 0.5 * std::exp(-x);
  for (int i = 1;; ++i) {
    const double t = i * h;
    const double term = std::exp(-x * std::cosh(t)) * std::cosh(nu * t);
    sum += term;
    if (term < 1e-19 * sum && t > 1.0) break;
  }
  return h * sum;
}

// (b / 16 pi) c^2 (K0(2c) + K2(2c)) via libstdc++'s special functions.
inline double kernel_bessel_std(double a, double b) {
  const double c = std::abs(a - b);
  return b / (16.0 * std::numbers::pi) * c * c * (std::cyl_bessel_k(0.0, 2.0 * c) + std::cyl_bessel_k(2.0, 2.0 * c));
}

// Same Bessel form with the trapezoid K_nu above.
inline double kernel_bessel_trapezoid(double a, double b) {
  const double c = std::abs(a - b);
  return b / (16.0 * std::numbers::pi) * c * c * (bessel_k_trapezoid(0, 2.0 * c) + bessel_k_trapezoid(2, 2.0 * c));
}

// u = c sinh t turns the kernel into (b/8pi) c^2 int_0^inf cosh^2 t exp(-2c cosh t) dt.
inline double kernel_sinh_substitution(double a, double b) {
  const double c = std::abs(a - b);
  const double h = 1.0 / 128.0;
  double sum = 0.5 * std::exp(-2.0 * c);
  for (int i = 1;; ++i) {
    const double t = i * h;
    const double ch = std::cosh(t);
    const double term = ch * ch * std::exp(-2.0 * c * ch);
    sum += term;
    if (term < 1e-19 * sum && t > 1.0) break;
  }
  return b / (8.0 * std::numbers::pi) * c * c * h * sum;
}

}  // namespace qfriction::oracle
