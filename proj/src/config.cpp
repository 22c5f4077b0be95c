#include "qfriction/config.hpp"

#include <cmath>
#include <cstdio>

#include "qfriction/constants.hpp"
#include "qfriction/errors.hpp"

namespace qfriction {

namespace {

void require_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw DomainError(std::string(name) + " must be positive and finite");
  }
}

}  // namespace

void SystemConfig::validate() const {
  require_positive(omega0, "omega0");
  require_positive(omega_sp, "omega_sp");
  require_positive(d, "d");
  require_positive(gamma_eg, "gamma_eg");
  if (!std::isfinite(v)) throw DomainError("v must be finite");
  if (std::abs(v) / PhysicalConstants::c >= kMaxBeta) {
    throw DomainError("|v|/c must stay below 0.5 (non-relativistic model)");
  }
}

std::vector<std::string> SystemConfig::warnings() const {
  std::vector<std::string> out;
  const double beta = std::abs(v) / PhysicalConstants::c;
  if (beta > kWarnBeta) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "|v|/c = %.3f exceeds 0.3; relativistic corrections are neglected", beta);
    out.emplace_back(buf);
  }
  return out;
}

NormalizedParams normalize(const SystemConfig& config) {
  if (config.v == 0.0) {
    throw DegenerateInputError("v = 0: normalized parameters omega d/|v| diverge");
  }
  const double inv = config.d / std::abs(config.v);
  return {config.omega0 * inv, config.omega_sp * inv};
}

SystemConfig config_from_normalized(NormalizedParams params, double d, double v, double gamma_eg) {
  const double scale = std::abs(v) / d;
  return SystemConfig{params.a * scale, params.b * scale, d, v, gamma_eg};
}

}  // namespace qfriction
