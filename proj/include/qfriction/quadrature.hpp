#pragma once

#include <array>
#include <cmath>
#include <span>
#include <vector>

#include "qfriction/errors.hpp"

namespace qfriction {

struct QuadratureSettings {
  double rel_tol = 1e-12;
  double abs_tol = 0.0;
  int max_subdivisions = 4096;

  // Throws DomainError unless rel_tol in (0, 1e-6] and max_subdivisions >= 16.
  void validate() const;
};

// 15-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendre15 {
  std::array<double, 15> nodes;
  std::array<double, 15> weights;
};

const GaussLegendre15& gauss_legendre15();

// Composite Gauss-Legendre with uniform interval doubling.
//
// The initial mesh is given by `breakpoints` (strictly increasing, at least
// two entries). Every refinement halves all panels; iteration stops once two
// successive estimates agree to max(abs_tol, rel_tol * |estimate|). Throws
// ConvergenceError carrying the last two estimates when the panel count
// would exceed settings.max_subdivisions.
template <class F>
double integrate_composite(F&& f, std::span<const double> breakpoints, const QuadratureSettings& settings) {
  const auto& rule = gauss_legendre15();
  auto panel_sum = [&](const std::vector<double>& mesh) {
    double total = 0.0;
    for (std::size_t p = 0; p + 1 < mesh.size(); ++p) {
      const double half = 0.5 * (mesh[p + 1] - mesh[p]);
      const double mid = 0.5 * (mesh[p + 1] + mesh[p]);
      double s = 0.0;
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        s += rule.weights[i] * f(mid + half * rule.nodes[i]);
      }
      total += half * s;
    }
    return total;
  };

  std::vector<double> mesh(breakpoints.begin(), breakpoints.end());
  double previous = panel_sum(mesh);
  for (;;) {
    std::vector<double> refined;
    refined.reserve(2 * mesh.size());
    for (std::size_t p = 0; p + 1 < mesh.size(); ++p) {
      refined.push_back(mesh[p]);
      refined.push_back(0.5 * (mesh[p] + mesh[p + 1]));
    }
    refined.push_back(mesh.back());
    if (static_cast<long>(refined.size()) - 1 > settings.max_subdivisions) {
      throw ConvergenceError("composite Gauss-Legendre did not converge within max_subdivisions", previous,
                             panel_sum(refined));
    }
    const double current = panel_sum(refined);
    if (std::abs(current - previous) <= std::max(settings.abs_tol, settings.rel_tol * std::abs(current))) {
      return current;
    }
    previous = current;
    mesh = std::move(refined);
  }
}

}  // namespace qfriction
