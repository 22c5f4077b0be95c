#pragma once

#include "qfriction/config.hpp"
#include "qfriction/rates.hpp"

namespace qfriction {

// x-force on the atom (atom frame; the atom moves with -v relative to the
// slab), the power force * v, and the dimensionless forms
//   normalized_force = force * 4 pi eps0 d^4 / gamma_eg^2
//   normalized_power = power * 4 pi eps0 d^3 / (omega_sp gamma_eg^2)
struct FrictionResult {
  double force = 0.0;  // N
  double power = 0.0;  // W
  double normalized_force = 0.0;
  double normalized_power = 0.0;
};

// Quasi-static force for an instantaneous excited-state probability p_e:
//   F = -p_e G+ hbar (w0 - wsp)/v + (1 - p_e) G- hbar (w0 + wsp)/v
FrictionResult friction_force(const SystemConfig& config, const RatePair& pair, double p_e);

// Stationary force (2 hbar wsp / v) G+ G- / (G+ + G-). Throws
// UndefinedEquilibriumError when both rates vanish.
FrictionResult friction_steady(const SystemConfig& config, const RatePair& pair);

// Stationary radiated power, force * v.
double radiated_power_steady(const SystemConfig& config, const RatePair& pair);

// Same stationary power written as 2 hbar wsp P_inf G+.
double radiated_power_from_population(const SystemConfig& config, const RatePair& pair);

// Dimensionless stationary force and power straight from kernel values:
// 16 pi b H and 16 pi H with H = g+ g- / (g+ + g-), for v > 0.
struct NormalizedFriction {
  double force = 0.0;
  double power = 0.0;
};
NormalizedFriction normalized_friction_steady(NormalizedParams params, const RatePair& kernel_pair);

}  // namespace qfriction
