#include "qfriction/rates.hpp"

#include <cmath>
#include <vector>

#include "qfriction/constants.hpp"
#include "qfriction/errors.hpp"

namespace qfriction {

namespace {

constexpr double kTailLength = 30.0;

// Panels of width ~c near the origin where the integrand curves on the
// scale c, then panels of width <= 2 out to c + 30.
std::vector<double> kernel_mesh(double c) {
  std::vector<double> mesh{0.0};
  if (c < 1.0) {
    for (double x = c; x < 1.0; x *= 2.0) mesh.push_back(x);
  }
  const double start = std::max(mesh.back(), std::min(c, 1.0));
  if (start > mesh.back()) mesh.push_back(start);
  const double end = c + kTailLength;
  const int panels = static_cast<int>(std::ceil((end - mesh.back()) / 2.0));
  const double from = mesh.back();
  for (int i = 1; i <= panels; ++i) mesh.push_back(from + (end - from) * i / panels);
  return mesh;
}

}  // namespace

double rate_prefactor(const SystemConfig& config) {
  return 2.0 * config.gamma_eg * config.gamma_eg /
         (PhysicalConstants::eps0 * PhysicalConstants::hbar * config.d * config.d * config.d);
}

double g_kernel(double a, double b, const QuadratureSettings& settings) {
  if (!(b > 0.0) || !std::isfinite(b)) throw DomainError("g_kernel: b must be positive");
  if (!std::isfinite(a)) throw DomainError("g_kernel: a must be finite");
  settings.validate();

  const double c = std::abs(a - b);
  // int_0^inf u exp(-2u) du = 1/4
  if (c == 0.0) return b / (32.0 * kPi);
  if (2.0 * c > kKernelUnderflowExponent) return 0.0;

  // Factor exp(-2c) out so the relative tolerance applies to O(1) values.
  auto integrand = [c](double u) {
    const double r = std::hypot(u, c);
    return r * std::exp(-2.0 * (r - c));
  };
  const auto mesh = kernel_mesh(c);
  const double integral = integrate_composite(integrand, mesh, settings);
  return b / (8.0 * kPi) * integral * std::exp(-2.0 * c);
}

RatePair rate_pair_from_normalized(NormalizedParams params, double prefactor, const QuadratureSettings& settings) {
  RatePair pair;
  pair.g_plus = g_kernel(params.a, params.b, settings);
  pair.g_minus = g_kernel(-params.a, params.b, settings);
  pair.gamma_plus = prefactor * pair.g_plus;
  pair.gamma_minus = prefactor * pair.g_minus;
  return pair;
}

RatePair gamma_pair(const SystemConfig& config, const QuadratureSettings& settings) {
  config.validate();
  return rate_pair_from_normalized(normalize(config), rate_prefactor(config), settings);
}

double im_c_int_zz(const SystemConfig& config, const QuadratureSettings& settings) {
  const RatePair pair = gamma_pair(config, settings);
  return (pair.g_plus - pair.g_minus) / (config.d * config.d * config.d);
}

}  // namespace qfriction
