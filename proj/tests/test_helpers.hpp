#pragma once

#include <random>

#include "qfriction/config.hpp"
#include "qfriction/constants.hpp"

namespace qfriction::testing {

inline constexpr double kDefaultD = 3e-9;
inline constexpr double kDefaultGamma = 1e-29;

// Physical config realizing (a, b) at d = 3 nm, v = 0.1c.
inline SystemConfig config_ab(double a, double b, double v_over_c = 0.1) {
  return config_from_normalized({a, b}, kDefaultD, v_over_c * PhysicalConstants::c, kDefaultGamma);
}

// Silver scenario at given distance and velocity, omega0 = omega_sp.
inline SystemConfig silver(double d, double v) {
  const double wsp = 2.0 * kPi * 646e12;
  return SystemConfig{wsp, wsp, d, v, kDefaultGamma};
}

// Random physical config with (a, b) in a range where both rates are resolvable.
inline SystemConfig random_config(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> ab(0.02, 3.0);
  std::uniform_real_distribution<double> log_d(std::log(1e-9), std::log(2e-8));
  std::uniform_real_distribution<double> beta(0.01, 0.29);
  std::uniform_real_distribution<double> log_g(std::log(1e-30), std::log(5e-29));
  std::bernoulli_distribution sign(0.5);
  const double d = std::exp(log_d(rng));
  const double v = beta(rng) * PhysicalConstants::c * (sign(rng) ? 1.0 : -1.0);
  return config_from_normalized({ab(rng), ab(rng)}, d, v, std::exp(log_g(rng)));
}

}  // namespace qfriction::testing
