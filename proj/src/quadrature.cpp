#include "qfriction/quadrature.hpp"

#include "qfriction/constants.hpp"

namespace qfriction {

void QuadratureSettings::validate() const {
  if (!(rel_tol > 0.0 && rel_tol <= 1e-6)) throw DomainError("rel_tol must lie in (0, 1e-6]");
  if (!(abs_tol >= 0.0)) throw DomainError("abs_tol must be non-negative");
  if (max_subdivisions < 16) throw DomainError("max_subdivisions must be at least 16");
}

namespace {

// Nodes from Newton iteration on P_15 starting at the Chebyshev guess.
GaussLegendre15 build_rule() {
  constexpr int n = 15;
  GaussLegendre15 rule{};
  for (int i = 0; i < n; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes[i] = x;
    rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

}  // namespace

const GaussLegendre15& gauss_legendre15() {
  static const GaussLegendre15 rule = build_rule();
  return rule;
}

}  // namespace qfriction
