#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "qfriction/constants.hpp"
#include "qfriction/dynamics.hpp"
#include "qfriction/errors.hpp"
#include "qfriction/optimize.hpp"
#include "qfriction/rates.hpp"
#include "qfriction/sweep.hpp"
#include "test_helpers.hpp"

using namespace qfriction;

namespace {

constexpr double kC = PhysicalConstants::c;

SweepSpec normalized_spec(SweepAxis axis1, std::optional<SweepAxis> axis2, Quantity q = Quantity::pe_steady) {
  SweepSpec spec;
  spec.axis1 = axis1;
  spec.axis2 = axis2;
  spec.fixed_normalized = {1.0, 1.0};
  spec.quantity = q;
  return spec;
}

SweepSpec silver_spec(SweepAxis axis1, std::optional<SweepAxis> axis2) {
  SweepSpec spec;
  spec.axis1 = axis1;
  spec.axis2 = axis2;
  spec.fixed = qfriction::testing::silver(3e-9, 0.1 * kC);
  spec.quantity = Quantity::pe_steady;
  return spec;
}

}  // namespace

TEST_CASE("axis sampling") {
  const SweepAxis lin{AxisName::a, 0.0, 1.0, 5};
  const auto x = lin.values();
  REQUIRE(x.size() == 5);
  CHECK(x.front() == 0.0);
  CHECK(x[2] == 0.5);
  CHECK(x.back() == 1.0);

  const SweepAxis lg{AxisName::b, 1e-3, 10.0, 5, AxisScale::log};
  const auto y = lg.values();
  CHECK(y.front() == 1e-3);
  CHECK(y[1] == doctest::Approx(1e-2));
  CHECK(y.back() == 10.0);
}

TEST_CASE("spec validation") {
  auto ok = normalized_spec({AxisName::a, 0.1, 2.0, 10}, SweepAxis{AxisName::b, 0.1, 2.0, 10});
  CHECK_NOTHROW(ok.validate());

  auto bad = ok;
  bad.axis1.count = 1;
  CHECK_THROWS_AS(bad.validate(), UsageError);
  bad = ok;
  bad.axis1.max = bad.axis1.min;
  CHECK_THROWS_AS(bad.validate(), UsageError);
  bad = ok;
  bad.axis1.scale = AxisScale::log;
  bad.axis1.min = 0.0;
  CHECK_THROWS_AS(bad.validate(), UsageError);
  bad = ok;
  bad.axis2->name = AxisName::a;
  CHECK_THROWS_AS(bad.validate(), UsageError);
  bad = ok;
  bad.axis2 = SweepAxis{AxisName::v, 0.1 * kC, 0.2 * kC, 4};
  CHECK_THROWS_AS(bad.validate(), UsageError);

  auto fast = silver_spec({AxisName::v, 0.1 * kC, 0.6 * kC, 4}, std::nullopt);
  CHECK_THROWS_AS(fast.validate(), UsageError);
  auto negative_d = silver_spec({AxisName::d, -1e-9, 5e-9, 4}, std::nullopt);
  CHECK_THROWS_AS(negative_d.validate(), UsageError);

  CHECK_THROWS_AS(parse_axis_name("q"), UsageError);
  CHECK_THROWS_AS(parse_quantity("force"), UsageError);
  CHECK(parse_quantity("normalized_force") == Quantity::normalized_force);
  CHECK(to_string(AxisName::omega0) == "omega0");
}

TEST_CASE("(a, b) map peaks on the diagonal") {
  const SweepAxis axis{AxisName::a, 0.01, 3.0, 200};
  auto spec = normalized_spec(axis, SweepAxis{AxisName::b, 0.01, 3.0, 200});
  const auto grid = run_sweep(spec);
  REQUIRE(grid.records.size() == 200u * 200u);
  const auto best = std::max_element(grid.records.begin(), grid.records.end(),
                                     [](const auto& l, const auto& r) { return *l.value < *r.value; });
  const double cell = (axis.max - axis.min) / (axis.count - 1);
  CHECK(std::abs(best->x1 - *best->x2) <= cell + 1e-12);
  CHECK(std::abs(best->x1 - 0.148762) <= cell);
  CHECK(*best->value == doctest::Approx(0.515).epsilon(0.002));
  for (const auto& r : grid.records) {
    REQUIRE(r.value.has_value());
    CHECK(std::isfinite(*r.value));
  }
}

TEST_CASE("1-D sweep equals point evaluations") {
  for (auto q : {Quantity::pe_steady, Quantity::gamma_total, Quantity::normalized_force, Quantity::normalized_power,
                 Quantity::gamma_plus, Quantity::gamma_minus}) {
    auto spec = normalized_spec({AxisName::b, 0.05, 4.0, 17, AxisScale::log}, std::nullopt, q);
    const auto grid = run_sweep(spec);
    REQUIRE(grid.records.size() == 17);
    for (const auto& r : grid.records) {
      CHECK_FALSE(r.x2.has_value());
      CHECK(*r.value == *evaluate_point(spec, r.x1, std::nullopt));
    }
  }
  // Normalized quantities reduce to the kernel formulas.
  auto spec = normalized_spec({AxisName::b, 0.5, 2.0, 3}, std::nullopt, Quantity::gamma_plus);
  CHECK(*evaluate_point(spec, 0.7, std::nullopt) == doctest::Approx(g_kernel(1.0, 0.7)).epsilon(1e-14));
}

TEST_CASE("sweeps do not depend on the worker count") {
  auto spec = normalized_spec({AxisName::a, 0.1, 2.0, 23}, SweepAxis{AxisName::b, 0.1, 2.0, 19},
                              Quantity::normalized_force);
  const auto one = run_sweep(spec, {}, 1);
  const auto four = run_sweep(spec, {}, 4);
  REQUIRE(one.records.size() == four.records.size());
  for (std::size_t i = 0; i < one.records.size(); ++i) {
    CHECK(one.records[i].x1 == four.records[i].x1);
    CHECK(one.records[i].x2 == four.records[i].x2);
    CHECK(one.records[i].value == four.records[i].value);
  }
}

TEST_CASE("v = 0 yields a null record") {
  auto spec = silver_spec({AxisName::v, -0.1 * kC, 0.1 * kC, 3}, std::nullopt);
  const auto grid = run_sweep(spec);
  CHECK(grid.records[0].value.has_value());
  CHECK_FALSE(grid.records[1].value.has_value());
  CHECK(*grid.records[0].value == doctest::Approx(*grid.records[2].value).epsilon(1e-14));
}

TEST_CASE("(v, d) map: the optimal velocity grows with distance") {
  auto spec = silver_spec({AxisName::d, 1.5e-9, 4.5e-9, 4}, SweepAxis{AxisName::v, 0.02 * kC, 0.45 * kC, 120});
  const auto grid = run_sweep(spec);
  double previous = 0.0;
  for (int i = 0; i < 4; ++i) {
    const auto first = grid.records.begin() + i * 120;
    const auto best = std::max_element(first, first + 120, [](const auto& l, const auto& r) { return *l.value < *r.value; });
    const double expected = 2.0 * kPi * 646e12 * best->x1 / 0.148762;
    CHECK(*best->x2 > previous);
    CHECK(std::abs(*best->x2 - expected) <= 0.43 * kC / 119.0 + 1e-9);
    previous = *best->x2;
  }
}

TEST_CASE("optimizer") {
  SUBCASE("parabola") {
    const auto opt = golden_section_maximize([](double x) { return -(x - 0.3) * (x - 0.3) + 2.0; }, 0.0, 1.0, 1e-9);
    CHECK(opt.argmax == doctest::Approx(0.3).epsilon(1e-8));
    CHECK(opt.max == doctest::Approx(2.0));
    CHECK(opt.evaluations > 10);
  }
  SUBCASE("failure modes") {
    CHECK_THROWS_AS(golden_section_maximize([](double x) { return x; }, 1.0, 0.0, 1e-6), OptimizationError);
    CHECK_THROWS_AS(golden_section_maximize([](double) { return 1.0; }, 0.0, 1.0, 1e-6), OptimizationError);
    CHECK_THROWS_AS(golden_section_maximize([](double x) { return x; }, 0.0, 1.0, 1e-6), OptimizationError);
  }
  SUBCASE("diagonal population maximum") {
    const auto opt = optimize_1d(Objective::pe_steady_diag, 0.01, 2.0, 1e-8);
    CHECK(opt.argmax == doctest::Approx(0.148762).epsilon(1e-5));
    CHECK(opt.max == doctest::Approx(0.514943).epsilon(1e-5));
  }
  SUBCASE("boundary force maximum") {
    const auto opt = optimize_1d(Objective::normalized_force_boundary, 0.5, 5.0, 1e-8);
    CHECK(opt.argmax == doctest::Approx(1.61883).epsilon(1e-5));
    CHECK(pe_steady(rate_pair_from_normalized({kDefaultBoundaryA, opt.argmax}, 1.0)) == doctest::Approx(0.5).epsilon(0.01));
  }
  SUBCASE("agrees with a dense sweep") {
    double best_b = 0.0;
    double best = -1.0;
    for (int i = 0; i < 2000; ++i) {
      const double b = 0.01 + (2.0 - 0.01) * i / 1999.0;
      const double value = objective_value(Objective::pe_steady_diag, b);
      if (value > best) best = value, best_b = b;
    }
    const auto opt = optimize_1d(Objective::pe_steady_diag, 0.01, 2.0, 1e-8);
    CHECK(std::abs(opt.argmax - best_b) <= 1.99 / 1999.0);
    CHECK(opt.max >= best);
  }
}

TEST_CASE("silver report") {
  const auto& silver = find_preset("silver");
  CHECK(silver.omega_sp == doctest::Approx(2.0 * kPi * 646e12));
  CHECK_THROWS_AS(find_preset("unobtainium"), UsageError);

  const double d = 3e-9;
  const auto report = physical_report(silver, d, silver.omega_sp, 1e-29, {0.01 * kC, 0.45 * kC, 441});
  REQUIRE(report.records.size() == 441);
  CHECK(report.v_star / kC == doctest::Approx(0.273).epsilon(0.01));
  CHECK(report.v_star / (silver.omega_sp * d) == doctest::Approx(6.72).epsilon(0.01));
  CHECK(report.pe_max == doctest::Approx(0.515).epsilon(0.002));

  double previous = -1.0;
  for (const auto& r : report.records) {
    CHECK(std::isfinite(r.pe_steady));
    CHECK(std::isfinite(r.force));
    CHECK(std::isfinite(r.power));
    if (r.v <= 0.02 * kC + 1.0) CHECK(r.pe_steady < 0.01);
    if (r.v < report.v_star) {
      CHECK(r.pe_steady >= previous);
      previous = r.pe_steady;
    }
  }
  CHECK_THROWS_AS(physical_report(silver, d, silver.omega_sp, 1e-29, {0.0, 0.45 * kC, 10}), UsageError);
}
