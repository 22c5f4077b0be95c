#include "qfriction/units.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <string>
#include <utility>

#include "qfriction/constants.hpp"
#include "qfriction/errors.hpp"

namespace qfriction {

namespace {

// Splits "<number><suffix>" and returns (number, suffix).
std::pair<double, std::string> split(std::string_view text, const char* what) {
  const std::string s(text);
  const char* begin = s.c_str();
  char* end = nullptr;
  errno = 0;
  const double value = std::strtod(begin, &end);
  if (end == begin || errno == ERANGE || !std::isfinite(value)) {
    throw UsageError(std::string("cannot parse ") + what + " '" + s + "'");
  }
  std::string suffix(end);
  while (!suffix.empty() && suffix.front() == ' ') suffix.erase(suffix.begin());
  return {value, suffix};
}

[[noreturn]] void bad_suffix(std::string_view text, const char* what, const char* expected) {
  throw UsageError(std::string(what) + " '" + std::string(text) + "' needs a unit suffix: " + expected);
}

}  // namespace

double parse_frequency(std::string_view text) {
  const auto [value, suffix] = split(text, "frequency");
  if (suffix == "THz") return 2.0 * kPi * value * 1e12;
  if (suffix == "rad/s") return value;
  bad_suffix(text, "frequency", "THz or rad/s");
}

double parse_distance(std::string_view text) {
  const auto [value, suffix] = split(text, "distance");
  if (suffix == "nm") return value * 1e-9;
  if (suffix == "m") return value;
  bad_suffix(text, "distance", "nm or m");
}

double parse_velocity(std::string_view text) {
  const auto [value, suffix] = split(text, "velocity");
  if (suffix == "c") return value * PhysicalConstants::c;
  if (suffix == "m/s") return value;
  bad_suffix(text, "velocity", "c or m/s");
}

double parse_dipole(std::string_view text) {
  const auto [value, suffix] = split(text, "dipole");
  if (suffix.empty() || suffix == "Cm") return value;
  bad_suffix(text, "dipole", "Cm");
}

}  // namespace qfriction
