#pragma once

#include <functional>

#include "qfriction/quadrature.hpp"

namespace qfriction {

struct Optimum {
  double argmax = 0.0;
  double max = 0.0;
  int evaluations = 0;
};

// Golden-section search for the maximum of a unimodal f on [lo, hi].
// Stops when the bracket is narrower than tol. Throws OptimizationError
// when lo >= hi, when f is flat across the initial probes, or when the
// maximum sits on the bracket edge (f not bracketed).
Optimum golden_section_maximize(const std::function<double(double)>& f, double lo, double hi, double tol);

enum class Objective {
  pe_steady_diag,            // P_inf(b, b) as a function of b
  normalized_force_boundary  // normalized stationary force at fixed small a, function of b
};

inline constexpr double kDefaultBoundaryA = 1e-3;

double objective_value(Objective objective, double b, double a_fixed = kDefaultBoundaryA,
                       const QuadratureSettings& settings = {});

Optimum optimize_1d(Objective objective, double lo, double hi, double tol, double a_fixed = kDefaultBoundaryA,
                    const QuadratureSettings& settings = {});

}  // namespace qfriction
