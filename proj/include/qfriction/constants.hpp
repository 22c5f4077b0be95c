#pragma once

#include <numbers>

namespace qfriction {

// CODATA 2018 exact/recommended values, SI units.
struct PhysicalConstants {
  static constexpr double hbar = 1.054571817e-34;   // J s
  static constexpr double eps0 = 8.8541878128e-12;  // F/m
  static constexpr double c = 299792458.0;          // m/s
};

inline constexpr double kPi = std::numbers::pi;

}  // namespace qfriction
