#pragma once

#include <array>
#include <complex>
#include <vector>

#include "qfriction/config.hpp"
#include "qfriction/quadrature.hpp"
#include "qfriction/rates.hpp"

namespace qfriction {

// Lossless Drude half space in z < 0: eps(w) = eps0 (1 - 2 wsp^2 / w^2).
// Vacuum above, interface at z = 0.
struct DrudeSlab {
  double omega_sp = 0.0;

  // Permittivity in F/m at frequency omega and height z.
  double permittivity(double omega, double z) const;
};

enum class Side { above, below };

// d[w eps(w)]/dw at w = wsp in units of eps0: 1 above the slab, 3 inside.
double dispersive_weight(Side side);

// Quasi-static SPP mode phi_k = A_k exp(i k.r) exp(-|k| |z|) at frequency wsp,
// normalized on a quantization area S0.
struct SPPMode {
  double kx = 0.0;         // rad/m
  double ky = 0.0;         // rad/m
  double amplitude = 0.0;  // |A_k|, V
  double omega = 0.0;      // rad/s

  double k_parallel() const;
};

// Builds the mode with |A_k|^2 = 1 / (2 k eps0 S0). Throws DomainError for k = 0.
SPPMode make_mode(double kx, double ky, double area, double omega_sp);

// E = -grad phi at (x, y, z).
std::array<std::complex<double>, 3> mode_field(const SPPMode& mode, double x, double y, double z);

// |E_z(z)|^2 = k^2 |A|^2 exp(-2 k |z|).
double mode_field_z_sq(const SPPMode& mode, double z);

// (1/2) int |E|^2 d[w eps]/dw d^3r over the quantization area, done
// analytically per half space. Equals 1 for a correctly normalized mode.
double mode_normalization(const SPPMode& mode, double area);

enum class Broadening { gaussian, lorentzian };

// Discretized k-space for the brute-force mode sum. The square grid
// {i dk : |i| <= k_max/dk}^2 stands for modes on an area S0 = (2 pi/dk)^2,
// so (1/S0) sum_k is exactly the Riemann sum of (2 pi)^-2 int d^2k.
// eta is the half-width (Lorentzian) or standard deviation (Gaussian) in
// rad/s of the function replacing the frequency delta.
struct ModeGrid {
  double dk = 0.0;
  double k_max = 0.0;
  double eta = 0.0;
  Broadening broadening = Broadening::gaussian;

  double area() const;
  long half_count() const;
  // Throws PreconditionError for dk <= 0, k_max/dk < 64 or eta <= 0.
  void validate() const;
};

// Broadened delta function of a frequency mismatch x (rad/s).
double broadened_delta(const ModeGrid& grid, double x);

inline constexpr double kDefaultCoarsestStep = 0.04;  // dk * d at level 0
inline constexpr double kDefaultBroadeningCells = 5.0;
inline constexpr int kDefaultLevels = 3;

// Default refinement level: dk = 0.04 / (2^level d), eta = 5 |v| dk,
// k_max = max(30/d, 3 (w0 + wsp)/|v|).
ModeGrid default_grid(const SystemConfig& config, int level, Broadening broadening = Broadening::gaussian);
std::vector<ModeGrid> default_schedule(const SystemConfig& config, int levels = kDefaultLevels,
                                       Broadening broadening = Broadening::gaussian);

// Column sums of |E_z(d)|^2 over k_y, one per k_x = i dk. Positive and
// negative k_y halves are kept apart so k_y parity can be checked.
struct ModeSpectrum {
  ModeGrid grid;
  double d = 0.0;
  std::vector<double> kx;
  std::vector<double> upper;   // k_y > 0
  std::vector<double> lower;   // k_y < 0
  std::vector<double> axis;    // k_y = 0

  double column(std::size_t i) const { return axis[i] + (upper[i] + lower[i]); }
};

ModeSpectrum build_spectrum(const ModeGrid& grid, double d, unsigned threads = 1);

// Mode-sum rates; g values are the rates divided by rate_prefactor(config).
// Throws DegenerateInputError (v = 0), PreconditionError (eta < 3 |v| dk)
// or CutoffError (resonance line beyond k_max).
RatePair brute_force_rates(const SystemConfig& config, const ModeGrid& grid, unsigned threads = 1);
RatePair brute_force_rates(const SystemConfig& config, const ModeSpectrum& spectrum);

// zz element of the anti-Hermitian part of the interaction dyadic at
// frequency omega, in the Im{C_int,zz} convention (1/m^3).
double anti_hermitian_c_zz(const SystemConfig& config, const ModeGrid& grid, double omega, unsigned threads = 1);
double anti_hermitian_c_zz(const SystemConfig& config, const ModeSpectrum& spectrum, double omega);

// Friction expectation from the two k_x-weighted mode sums.
double brute_force_friction(const SystemConfig& config, const ModeGrid& grid, double p_e, unsigned threads = 1);
double brute_force_friction(const SystemConfig& config, const ModeSpectrum& spectrum, double p_e);

// One row of a refinement study: mode-sum values against the closed forms.
struct RefinementRecord {
  int level = 0;
  double dk_times_d = 0.0;
  double gamma_plus = 0.0;
  double gamma_minus = 0.0;
  double force = 0.0;
  double closed_gamma_plus = 0.0;
  double closed_gamma_minus = 0.0;
  double closed_force = 0.0;
  double err_gamma_plus = 0.0;   // relative
  double err_gamma_minus = 0.0;  // relative
  double err_force = 0.0;        // relative

  double max_error() const;
};

// Runs the schedule; force is evaluated at the closed-form stationary p_e.
std::vector<RefinementRecord> refinement_study(const SystemConfig& config, const std::vector<ModeGrid>& schedule,
                                               const QuadratureSettings& settings = {}, unsigned threads = 1);

inline constexpr double kOracleTolerance = 0.01;

// Finest level within 1% and every error channel shrinking by at least
// 1.5x per level until it is below 0.5%.
bool refinement_passes(const std::vector<RefinementRecord>& records);

}  // namespace qfriction
