#pragma once

#include <string>
#include <vector>

namespace qfriction {

// Physical scenario: a two-level atom at height d above a Drude slab
// that slides with velocity v (along x) relative to the atom. In the
// slab frame the atom therefore moves with -v. The transition dipole is
// taken real and along z.
struct SystemConfig {
  double omega0 = 0.0;    // atomic transition, rad/s
  double omega_sp = 0.0;  // surface-plasmon resonance, rad/s
  double d = 0.0;         // atom-surface distance, m
  double v = 0.0;         // slab velocity relative to the atom, m/s (signed)
  double gamma_eg = 0.0;  // transition dipole, C m

  // Throws DomainError for non-positive omega0, omega_sp, d, gamma_eg or
  // |v|/c >= 0.5. v == 0 is allowed here; rate operations reject it.
  void validate() const;

  // Human-readable notes about regimes where the model is questionable.
  std::vector<std::string> warnings() const;
};

inline constexpr double kMaxBeta = 0.5;
inline constexpr double kWarnBeta = 0.3;

// (a, b) = (omega0 d/|v|, omega_sp d/|v|).
struct NormalizedParams {
  double a = 0.0;
  double b = 0.0;
};

// Throws DegenerateInputError when v == 0.
NormalizedParams normalize(const SystemConfig& config);

// Inverse map: a config with the given (a, b) at fixed d, v, gamma_eg.
SystemConfig config_from_normalized(NormalizedParams params, double d, double v, double gamma_eg);

}  // namespace qfriction
