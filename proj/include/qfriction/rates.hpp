#pragma once

#include "qfriction/config.hpp"
#include "qfriction/quadrature.hpp"

namespace qfriction {

// Descending (gamma_plus) and ascending (gamma_minus) transition rates
// together with the dimensionless kernel values they were built from.
struct RatePair {
  double gamma_plus = 0.0;   // 1/s
  double gamma_minus = 0.0;  // 1/s
  double g_plus = 0.0;
  double g_minus = 0.0;
};

// 2 gamma_eg^2 / (eps0 hbar d^3), the factor turning G values into rates.
double rate_prefactor(const SystemConfig& config);

// Underflow guard: G is reported as exactly zero once 2|a - b| exceeds this.
inline constexpr double kKernelUnderflowExponent = 690.0;

// G(a, b) = b/(8 pi) * int_0^inf sqrt(u^2 + c^2) exp(-2 sqrt(u^2 + c^2)) du,
// c = |a - b|. The integral runs over [0, c + 30]; the dropped tail is below
// e^-60 relative. Throws DomainError for b <= 0.
double g_kernel(double a, double b, const QuadratureSettings& settings = {});

// Kernel pair (G(a, b), G(-a, b)) scaled into a RatePair by `prefactor`.
// prefactor = 1 gives the normalized (g-only) form used by sweeps.
RatePair rate_pair_from_normalized(NormalizedParams params, double prefactor,
                                   const QuadratureSettings& settings = {});

// Quasi-static rates for a physical configuration. Invariant under v -> -v.
// Throws DegenerateInputError for v == 0.
RatePair gamma_pair(const SystemConfig& config, const QuadratureSettings& settings = {});

// Gamma_gr = Gamma+ - Gamma-. Negative values mean the stationary state is
// population inverted.
inline double gamma_total(const RatePair& pair) { return pair.gamma_plus - pair.gamma_minus; }

// Im{C_int,zz} = (G(a,b) - G(-a,b)) / d^3, in 1/m^3.
double im_c_int_zz(const SystemConfig& config, const QuadratureSettings& settings = {});

}  // namespace qfriction
