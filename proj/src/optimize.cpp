#include "qfriction/optimize.hpp"

#include <cmath>

#include "qfriction/dynamics.hpp"
#include "qfriction/errors.hpp"
#include "qfriction/friction.hpp"
#include "qfriction/rates.hpp"

namespace qfriction {

Optimum golden_section_maximize(const std::function<double(double)>& f, double lo, double hi, double tol) {
  if (!(lo < hi)) throw OptimizationError("golden section: need lo < hi");
  if (!(tol > 0.0)) throw OptimizationError("golden section: tol must be positive");

  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  const double f_lo = f(lo);
  const double f_hi = f(hi);
  double a = lo;
  double b = hi;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  int evaluations = 4;
  if (f_lo == f1 && f1 == f2 && f2 == f_hi) throw OptimizationError("golden section: objective is flat");

  while (b - a > tol) {
    if (f1 >= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    }
    ++evaluations;
  }
  const bool left = f1 >= f2;
  Optimum best{left ? x1 : x2, left ? f1 : f2, evaluations};
  // A maximum pinned to an endpoint means the bracket did not contain it.
  if (best.argmax - lo <= tol || hi - best.argmax <= tol || f_lo >= best.max || f_hi >= best.max) {
    throw OptimizationError("golden section: maximum not bracketed by [lo, hi]");
  }
  return best;
}

double objective_value(Objective objective, double b, double a_fixed, const QuadratureSettings& settings) {
  switch (objective) {
    case Objective::pe_steady_diag:
      return pe_steady(rate_pair_from_normalized({b, b}, 1.0, settings));
    case Objective::normalized_force_boundary: {
      const NormalizedParams p{a_fixed, b};
      return normalized_friction_steady(p, rate_pair_from_normalized(p, 1.0, settings)).force;
    }
  }
  throw UsageError("unknown objective");
}

Optimum optimize_1d(Objective objective, double lo, double hi, double tol, double a_fixed,
                    const QuadratureSettings& settings) {
  return golden_section_maximize([&](double b) { return objective_value(objective, b, a_fixed, settings); }, lo, hi,
                                 tol);
}

}  // namespace qfriction
