#pragma once

#include <span>
#include <vector>

#include "qfriction/rates.hpp"

namespace qfriction {

// Excited-state probability <sigma+ sigma->.
struct PopulationState {
  double p_e = 0.0;
};

struct TrajectorySample {
  double t = 0.0;    // s
  double p_e = 0.0;
};

struct PopulationTrajectory {
  std::vector<TrajectorySample> samples;
  double p_e_infinity = 0.0;
  int accepted_steps = 0;
  int rejected_steps = 0;
};

// Solution of dP/dt = G- - P (G- + G+) starting from p0. Returns p0 when
// both rates vanish.
double pe_closed_form(const RatePair& pair, double p0, double t);

// G- / (G- + G+). Throws UndefinedEquilibriumError when both rates are zero.
double pe_steady(const RatePair& pair);

// Right-hand side of the population rate equation.
inline double pe_derivative(const RatePair& pair, double p) {
  return pair.gamma_minus - p * (pair.gamma_minus + pair.gamma_plus);
}

// Integrates the rate equation with an embedded Dormand-Prince 5(4) pair
// and reports P_e at every entry of t_grid (increasing, starting at 0).
// The local error per step is held below rel_tol * max(|P|, 1) / 10.
// Throws IntegrationError on step-size underflow, DomainError on a bad grid.
PopulationTrajectory evolve_ode(const RatePair& pair, double p0, std::span<const double> t_grid, double rel_tol = 1e-9);

// <sigma_z> = 2 p_e - 1.
inline double sigma_z_expectation(PopulationState state) { return 2.0 * state.p_e - 1.0; }

// p G+ - (1 - p) G-: net downward flux; vanishes at the stationary state.
inline double detailed_balance_residual(const RatePair& pair, double p) {
  return p * pair.gamma_plus - (1.0 - p) * pair.gamma_minus;
}

}  // namespace qfriction
