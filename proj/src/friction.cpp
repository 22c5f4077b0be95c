#include "qfriction/friction.hpp"

#include <cmath>

#include "qfriction/constants.hpp"
#include "qfriction/dynamics.hpp"
#include "qfriction/errors.hpp"

namespace qfriction {

namespace {

void require_motion(const SystemConfig& config) {
  if (config.v == 0.0) throw DegenerateInputError("friction: v = 0 leaves the quasi-static force undefined");
}

FrictionResult finish(const SystemConfig& config, double force) {
  const double g2 = config.gamma_eg * config.gamma_eg;
  const double eps = PhysicalConstants::eps0;
  const double d3 = config.d * config.d * config.d;
  FrictionResult r;
  r.force = force;
  r.power = force * config.v;
  r.normalized_force = force * 4.0 * kPi * eps * d3 * config.d / g2;
  r.normalized_power = r.power * 4.0 * kPi * eps * d3 / (config.omega_sp * g2);
  return r;
}

}  // namespace

FrictionResult friction_force(const SystemConfig& config, const RatePair& pair, double p_e) {
  require_motion(config);
  if (!(p_e >= 0.0 && p_e <= 1.0)) throw DomainError("friction_force: p_e must lie in [0, 1]");
  const double hbar = PhysicalConstants::hbar;
  const double force = -p_e * pair.gamma_plus * hbar * (config.omega0 - config.omega_sp) / config.v +
                       (1.0 - p_e) * pair.gamma_minus * hbar * (config.omega0 + config.omega_sp) / config.v;
  return finish(config, force);
}

FrictionResult friction_steady(const SystemConfig& config, const RatePair& pair) {
  require_motion(config);
  const double total = pair.gamma_plus + pair.gamma_minus;
  if (!(total > 0.0)) throw UndefinedEquilibriumError("friction_steady: both rates vanish");
  const double force =
      2.0 * PhysicalConstants::hbar * config.omega_sp / config.v * (pair.gamma_plus * pair.gamma_minus / total);
  return finish(config, force);
}

double radiated_power_steady(const SystemConfig& config, const RatePair& pair) {
  return friction_steady(config, pair).power;
}

double radiated_power_from_population(const SystemConfig& config, const RatePair& pair) {
  return 2.0 * PhysicalConstants::hbar * config.omega_sp * pe_steady(pair) * pair.gamma_plus;
}

NormalizedFriction normalized_friction_steady(NormalizedParams params, const RatePair& kernel_pair) {
  const double total = kernel_pair.g_plus + kernel_pair.g_minus;
  if (!(total > 0.0)) throw UndefinedEquilibriumError("normalized friction: both kernel values vanish");
  const double h = kernel_pair.g_plus * kernel_pair.g_minus / total;
  return {16.0 * kPi * params.b * h, 16.0 * kPi * h};
}

}  // namespace qfriction
