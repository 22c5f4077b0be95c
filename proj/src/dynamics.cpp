#include "qfriction/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qfriction/errors.hpp"

namespace qfriction {

double pe_closed_form(const RatePair& pair, double p0, double t) {
  const double total = pair.gamma_minus + pair.gamma_plus;
  if (total == 0.0) return p0;
  const double decay = std::exp(-total * t);
  return pair.gamma_minus / total * (1.0 - decay) + p0 * decay;
}

double pe_steady(const RatePair& pair) {
  const double total = pair.gamma_minus + pair.gamma_plus;
  if (!(total > 0.0)) throw UndefinedEquilibriumError("stationary population undefined: both rates vanish");
  return pair.gamma_minus / total;
}

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784, b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;

struct StepResult {
  double y;
  double error;
};

template <class Rhs>
StepResult dopri_step(Rhs&& f, double t, double y, double h) {
  const double k1 = f(t, y);
  const double k2 = f(t + c2 * h, y + h * a21 * k1);
  const double k3 = f(t + c3 * h, y + h * (a31 * k1 + a32 * k2));
  const double k4 = f(t + c4 * h, y + h * (a41 * k1 + a42 * k2 + a43 * k3));
  const double k5 = f(t + c5 * h, y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
  const double k6 = f(t + h, y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
  const double y_new = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
  const double k7 = f(t + h, y_new);
  const double err = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);
  return {y_new, std::abs(err)};
}

}  // namespace

PopulationTrajectory evolve_ode(const RatePair& pair, double p0, std::span<const double> t_grid, double rel_tol) {
  if (t_grid.empty() || t_grid.front() != 0.0) throw DomainError("evolve_ode: t_grid must start at 0");
  for (std::size_t i = 1; i < t_grid.size(); ++i) {
    if (!(t_grid[i] > t_grid[i - 1])) throw DomainError("evolve_ode: t_grid must be strictly increasing");
  }
  if (!(p0 >= 0.0 && p0 <= 1.0)) throw DomainError("evolve_ode: p0 must lie in [0, 1]");
  if (!(rel_tol > 0.0)) throw DomainError("evolve_ode: rel_tol must be positive");

  auto rhs = [&pair](double, double p) { return pe_derivative(pair, p); };
  const double total = pair.gamma_minus + pair.gamma_plus;
  const double tol = rel_tol / 10.0;

  PopulationTrajectory out;
  out.p_e_infinity = total > 0.0 ? pe_steady(pair) : p0;
  out.samples.push_back({0.0, p0});

  double t = 0.0;
  double y = p0;
  double h = total > 0.0 ? 0.01 / total : (t_grid.size() > 1 ? t_grid[1] : 1.0);
  for (std::size_t i = 1; i < t_grid.size(); ++i) {
    const double target = t_grid[i];
    while (t < target) {
      // A previous step can stop a few ulps short of the output time.
      if (target - t <= 8.0 * std::numeric_limits<double>::epsilon() * target) {
        t = target;
        break;
      }
      const bool last = t + h >= target;
      const double step = last ? target - t : h;
      if (step <= std::abs(t) * 1e-15) throw IntegrationError("evolve_ode: step size underflow");
      const StepResult r = dopri_step(rhs, t, y, step);
      const double scale = std::max(1.0, std::abs(y));
      const double ratio = r.error / (tol * scale);
      if (ratio <= 1.0) {
        t = last ? target : t + step;
        y = r.y;
        ++out.accepted_steps;
      } else {
        ++out.rejected_steps;
      }
      const double factor = ratio == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(ratio, -0.2), 0.2, 5.0);
      // A truncated final step says nothing about the natural step size.
      if (!(last && ratio <= 1.0)) h = step * factor;
    }
    out.samples.push_back({target, y});
  }
  return out;
}

}  // namespace qfriction
