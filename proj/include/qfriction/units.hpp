#pragma once

#include <string_view>

namespace qfriction {

// Unit-suffixed quantity parsing for the command line. Results are SI.
//   frequency: "646THz" (cycles per second, times 2 pi) or "4.06e15rad/s"
//   distance:  "3nm" or "3e-9m"
//   velocity:  "0.273c" (fraction of c) or "8.2e7m/s"
//   dipole:    "1e-29Cm" or a bare number in C m
// Throws UsageError on a missing/unknown suffix or malformed number.
double parse_frequency(std::string_view text);
double parse_distance(std::string_view text);
double parse_velocity(std::string_view text);
double parse_dipole(std::string_view text);

}  // namespace qfriction
