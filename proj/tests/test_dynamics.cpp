#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "qfriction/dynamics.hpp"
#include "qfriction/errors.hpp"
#include "qfriction/rates.hpp"
#include "test_helpers.hpp"

using namespace qfriction;
using qfriction::testing::config_ab;

namespace {

RatePair rates(double up, double down) { return RatePair{up, down, 0.0, 0.0}; }

std::vector<double> linear_grid(double t_final, int n) {
  std::vector<double> t(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) t[static_cast<std::size_t>(i)] = t_final * i / (n - 1);
  return t;
}

}  // namespace

TEST_CASE("closed-form population") {
  CHECK(pe_closed_form(rates(1.0, 0.0), 1.0, 1.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
  CHECK(pe_closed_form(rates(1.0, 1.0), 0.0, std::log(2.0) / 2.0) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(pe_closed_form(rates(1.0, 1.0), 0.0, 1e3) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(pe_closed_form(rates(3.0, 1.0), 0.7, 0.0) == 0.7);
  CHECK(pe_closed_form(rates(0.0, 0.0), 0.3, 5.0) == 0.3);
}

TEST_CASE("stationary population") {
  CHECK(pe_steady(rates(1.0, 0.0)) == 0.0);
  CHECK(pe_steady(rates(0.0, 1.0)) == 1.0);
  CHECK(pe_steady(rates(2.0, 2.0)) == 0.5);
  CHECK_THROWS_AS(pe_steady(rates(0.0, 0.0)), UndefinedEquilibriumError);

  // Equal resonances at b = 0.148 give a slightly inverted atom.
  CHECK(pe_steady(gamma_pair(config_ab(0.148, 0.148))) == doctest::Approx(0.514943).epsilon(1e-5));
}

TEST_CASE("ODE integration matches the closed form") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> log_rate(std::log(1e6), std::log(1e12));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 25; ++trial) {
    const RatePair pair = rates(std::exp(log_rate(rng)), std::exp(log_rate(rng)));
    const double p0 = unit(rng);
    const double tau = 1.0 / (pair.gamma_plus + pair.gamma_minus);
    const auto grid = linear_grid(8.0 * tau, 101);
    const auto traj = evolve_ode(pair, p0, grid, 1e-9);
    REQUIRE(traj.samples.size() == grid.size());
    CHECK(traj.p_e_infinity == doctest::Approx(pe_steady(pair)));
    CHECK(traj.accepted_steps > 0);
    double worst = 0.0;
    for (const auto& s : traj.samples) worst = std::max(worst, std::abs(s.p_e - pe_closed_form(pair, p0, s.t)));
    CHECK(worst < 1e-8);
  }
}

TEST_CASE("ODE reaches every output time over widely spread rates") {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> log_rate(std::log(1e5), std::log(1e13));
  for (int trial = 0; trial < 200; ++trial) {
    const RatePair pair = rates(std::exp(log_rate(rng)), std::exp(log_rate(rng)));
    const auto grid = linear_grid(10.0 / (pair.gamma_plus + pair.gamma_minus), 201);
    PopulationTrajectory traj;
    REQUIRE_NOTHROW(traj = evolve_ode(pair, 0.3, grid));
    CHECK(std::abs(traj.samples.back().p_e - pe_closed_form(pair, 0.3, grid.back())) < 1e-8);
  }
}

TEST_CASE("ODE edge cases") {
  const RatePair pair = rates(2.0, 1.0);
  const auto grid = linear_grid(5.0, 11);

  SUBCASE("starting at the fixed point stays there") {
    const double p = pe_steady(pair);
    for (const auto& s : evolve_ode(pair, p, grid).samples) CHECK(s.p_e == doctest::Approx(p).epsilon(1e-12));
  }
  SUBCASE("initial slope at p0 = 1/2 is G+ - G- with a minus sign") {
    CHECK(pe_derivative(pair, 0.5) == doctest::Approx(-(pair.gamma_plus - pair.gamma_minus) / 2.0));
  }
  SUBCASE("bad grids") {
    const std::vector<double> shifted{0.5, 1.0};
    const std::vector<double> backwards{0.0, 2.0, 1.0};
    CHECK_THROWS_AS(evolve_ode(pair, 0.5, shifted), DomainError);
    CHECK_THROWS_AS(evolve_ode(pair, 0.5, backwards), DomainError);
    CHECK_THROWS_AS(evolve_ode(pair, 1.5, grid), DomainError);
  }
}

TEST_CASE("populations stay in [0, 1] and approach P_inf monotonically") {
  const RatePair pair = gamma_pair(config_ab(0.5, 1.0));
  const double p_inf = pe_steady(pair);
  const double tau = 1.0 / (pair.gamma_plus + pair.gamma_minus);
  const auto grid = linear_grid(10.0 * tau, 201);
  for (double p0 : {0.0, 1.0}) {
    const auto traj = evolve_ode(pair, p0, grid);
    double previous_gap = std::abs(p0 - p_inf);
    for (const auto& s : traj.samples) {
      CHECK(s.p_e >= -1e-12);
      CHECK(s.p_e <= 1.0 + 1e-12);
      const double gap = std::abs(s.p_e - p_inf);
      CHECK(gap <= previous_gap + 1e-12);
      previous_gap = gap;
    }
  }
}

TEST_CASE("sigma_z and detailed balance") {
  CHECK(sigma_z_expectation({0.515}) == doctest::Approx(0.03));
  CHECK(sigma_z_expectation({0.0}) == -1.0);
  CHECK(sigma_z_expectation({1.0}) == 1.0);

  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    const RatePair pair = gamma_pair(qfriction::testing::random_config(rng));
    const double scale = pair.gamma_plus + pair.gamma_minus;
    CHECK(std::abs(detailed_balance_residual(pair, pe_steady(pair))) < 1e-14 * scale);
  }
}

TEST_CASE("inversion happens exactly when the total rate is negative") {
  for (double a = 0.05; a < 3.0; a += 0.15) {
    for (double b = 0.05; b < 3.0; b += 0.15) {
      const RatePair pair = rate_pair_from_normalized({a, b}, 1.0);
      CHECK((pe_steady(pair) > 0.5) == (gamma_total(pair) < 0.0));
    }
  }
}
