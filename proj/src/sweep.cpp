#include "qfriction/sweep.hpp"

#include <algorithm>
#include <cmath>

#include "qfriction/constants.hpp"
#include "qfriction/dynamics.hpp"
#include "qfriction/errors.hpp"
#include "qfriction/friction.hpp"
#include "qfriction/optimize.hpp"
#include "qfriction/parallel.hpp"
#include "qfriction/rates.hpp"

namespace qfriction {

namespace {

constexpr std::pair<AxisName, std::string_view> kAxisNames[] = {
    {AxisName::a, "a"}, {AxisName::b, "b"}, {AxisName::v, "v"}, {AxisName::d, "d"}, {AxisName::omega0, "omega0"}};

constexpr std::pair<Quantity, std::string_view> kQuantityNames[] = {
    {Quantity::pe_steady, "pe_steady"},         {Quantity::gamma_total, "gamma_total"},
    {Quantity::normalized_force, "normalized_force"}, {Quantity::normalized_power, "normalized_power"},
    {Quantity::gamma_plus, "gamma_plus"},       {Quantity::gamma_minus, "gamma_minus"}};

bool is_normalized_axis(AxisName name) { return name == AxisName::a || name == AxisName::b; }

void validate_axis(const SweepAxis& axis, const char* field) {
  const std::string f(field);
  if (axis.count < 2) throw UsageError(f + ".count must be at least 2");
  if (!std::isfinite(axis.min) || !std::isfinite(axis.max) || !(axis.min < axis.max)) {
    throw UsageError(f + ": need finite min < max");
  }
  if (axis.scale == AxisScale::log && !(axis.min > 0.0)) throw UsageError(f + ": log scale needs min > 0");
  switch (axis.name) {
    case AxisName::b:
    case AxisName::d:
    case AxisName::omega0:
      if (!(axis.min > 0.0)) throw UsageError(f + ": " + std::string(to_string(axis.name)) + " must be positive");
      break;
    case AxisName::v:
      if (std::max(std::abs(axis.min), std::abs(axis.max)) / PhysicalConstants::c >= kMaxBeta) {
        throw UsageError(f + ": |v|/c must stay below 0.5");
      }
      break;
    case AxisName::a:
      break;
  }
}

std::optional<double> pick(const RatePair& pair, Quantity quantity, const std::optional<double>& normalized_b,
                           const SystemConfig* config) {
  const bool both_zero = pair.gamma_plus + pair.gamma_minus == 0.0;
  switch (quantity) {
    case Quantity::pe_steady:
      if (both_zero) return std::nullopt;
      return pe_steady(pair);
    case Quantity::gamma_total:
      return gamma_total(pair);
    case Quantity::gamma_plus:
      return pair.gamma_plus;
    case Quantity::gamma_minus:
      return pair.gamma_minus;
    case Quantity::normalized_force:
    case Quantity::normalized_power: {
      if (both_zero) return std::nullopt;
      if (config == nullptr) {
        const auto f = normalized_friction_steady({0.0, *normalized_b}, pair);
        return quantity == Quantity::normalized_force ? f.force : f.power;
      }
      const auto f = friction_steady(*config, pair);
      return quantity == Quantity::normalized_force ? f.normalized_force : f.normalized_power;
    }
  }
  return std::nullopt;
}

void assign(SystemConfig& config, AxisName name, double value) {
  switch (name) {
    case AxisName::v: config.v = value; break;
    case AxisName::d: config.d = value; break;
    case AxisName::omega0: config.omega0 = value; break;
    default: break;
  }
}

}  // namespace

std::string_view to_string(AxisName name) {
  for (const auto& [n, s] : kAxisNames) {
    if (n == name) return s;
  }
  return "?";
}

std::string_view to_string(Quantity quantity) {
  for (const auto& [q, s] : kQuantityNames) {
    if (q == quantity) return s;
  }
  return "?";
}

AxisName parse_axis_name(std::string_view text) {
  for (const auto& [n, s] : kAxisNames) {
    if (s == text) return n;
  }
  throw UsageError("unknown axis name '" + std::string(text) + "' (expected a, b, v, d, omega0)");
}

Quantity parse_quantity(std::string_view text) {
  for (const auto& [q, s] : kQuantityNames) {
    if (s == text) return q;
  }
  throw UsageError("unknown quantity '" + std::string(text) + "'");
}

std::vector<double> SweepAxis::values() const {
  std::vector<double> out(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const double t = static_cast<double>(i) / (count - 1);
    if (scale == AxisScale::linear) {
      out[static_cast<std::size_t>(i)] = min + (max - min) * t;
    } else {
      out[static_cast<std::size_t>(i)] = std::exp(std::log(min) + (std::log(max) - std::log(min)) * t);
    }
  }
  out.front() = min;
  out.back() = max;
  return out;
}

bool SweepSpec::normalized_mode() const { return is_normalized_axis(axis1.name); }

void SweepSpec::validate() const {
  validate_axis(axis1, "axis1");
  if (axis2) {
    validate_axis(*axis2, "axis2");
    if (axis2->name == axis1.name) throw UsageError("axis2.name must differ from axis1.name");
    if (is_normalized_axis(axis1.name) != is_normalized_axis(axis2->name)) {
      throw UsageError("axis2.name: normalized axes (a, b) cannot be mixed with physical axes (v, d, omega0)");
    }
  }
  if (normalized_mode()) {
    const bool has_b = axis1.name == AxisName::b || (axis2 && axis2->name == AxisName::b);
    if (!has_b && !(fixed_normalized.b > 0.0)) throw UsageError("fixed b must be positive");
  } else {
    SystemConfig probe = fixed;
    assign(probe, axis1.name, axis1.max);
    if (axis2) assign(probe, axis2->name, axis2->max);
    if (probe.v == 0.0) probe.v = 1.0;
    try {
      probe.validate();
    } catch (const DomainError& e) {
      throw UsageError(std::string("fixed config: ") + e.what());
    }
  }
}

std::optional<double> evaluate_point(const SweepSpec& spec, double x1, std::optional<double> x2,
                                     const QuadratureSettings& settings) {
  if (spec.normalized_mode()) {
    NormalizedParams p = spec.fixed_normalized;
    (spec.axis1.name == AxisName::a ? p.a : p.b) = x1;
    if (spec.axis2 && x2) (spec.axis2->name == AxisName::a ? p.a : p.b) = *x2;
    const RatePair pair = rate_pair_from_normalized(p, 1.0, settings);
    return pick(pair, spec.quantity, p.b, nullptr);
  }
  SystemConfig config = spec.fixed;
  assign(config, spec.axis1.name, x1);
  if (spec.axis2 && x2) assign(config, spec.axis2->name, *x2);
  if (config.v == 0.0) return std::nullopt;
  const RatePair pair = gamma_pair(config, settings);
  return pick(pair, spec.quantity, std::nullopt, &config);
}

SweepGrid run_sweep(const SweepSpec& spec, const QuadratureSettings& settings, unsigned threads) {
  spec.validate();
  settings.validate();
  const auto xs = spec.axis1.values();
  const auto ys = spec.axis2 ? spec.axis2->values() : std::vector<double>{};
  const std::size_t inner = spec.axis2 ? ys.size() : 1;

  SweepGrid grid;
  grid.spec = spec;
  grid.records.resize(xs.size() * inner);
  parallel_for(grid.records.size(), threads, [&](std::size_t idx) {
    SweepRecord& r = grid.records[idx];
    r.x1 = xs[idx / inner];
    if (spec.axis2) r.x2 = ys[idx % inner];
    r.value = evaluate_point(spec, r.x1, r.x2, settings);
  });
  return grid;
}

const std::vector<MaterialPreset>& material_presets() {
  static const std::vector<MaterialPreset> presets{{"silver", 2.0 * kPi * 646e12}};
  return presets;
}

const MaterialPreset& find_preset(std::string_view name) {
  for (const auto& p : material_presets()) {
    if (p.name == name) return p;
  }
  throw UsageError("unknown material preset '" + std::string(name) + "'");
}

PhysicalReport physical_report(const MaterialPreset& preset, double d, double omega0, double gamma_eg,
                               VelocityRange v_range, const QuadratureSettings& settings, unsigned threads) {
  if (v_range.count < 3) throw UsageError("v_range.count must be at least 3");
  if (!(v_range.min > 0.0 && v_range.min < v_range.max)) throw UsageError("v_range: need 0 < min < max");
  SystemConfig base{omega0, preset.omega_sp, d, v_range.max, gamma_eg};
  try {
    base.validate();
  } catch (const DomainError& e) {
    throw UsageError(std::string("report: ") + e.what());
  }

  PhysicalReport report;
  report.records.resize(static_cast<std::size_t>(v_range.count));
  parallel_for(report.records.size(), threads, [&](std::size_t i) {
    const double t = static_cast<double>(i) / (v_range.count - 1);
    SystemConfig config = base;
    config.v = i + 1 == report.records.size() ? v_range.max : v_range.min + (v_range.max - v_range.min) * t;
    const RatePair pair = gamma_pair(config, settings);
    ReportRecord& r = report.records[i];
    r.v = config.v;
    r.gamma_plus = pair.gamma_plus;
    r.gamma_minus = pair.gamma_minus;
    // Both kernels underflow only when |a - b| > 345; then G-/G+ -> 0 and
    // the stationary population and force vanish in the limit.
    if (pair.gamma_plus + pair.gamma_minus > 0.0) {
      r.pe_steady = pe_steady(pair);
      const FrictionResult f = friction_steady(config, pair);
      r.force = f.force;
      r.power = f.power;
    }
  });

  const auto best = std::max_element(report.records.begin(), report.records.end(),
                                     [](const auto& x, const auto& y) { return x.pe_steady < y.pe_steady; });
  const std::size_t k = static_cast<std::size_t>(best - report.records.begin());
  const double lo = report.records[k == 0 ? 0 : k - 1].v;
  const double hi = report.records[std::min(k + 1, report.records.size() - 1)].v;
  auto pe_of_v = [&](double v) {
    SystemConfig config = base;
    config.v = v;
    return pe_steady(gamma_pair(config, settings));
  };
  if (k == 0 || k + 1 == report.records.size()) {
    // Maximum on the range edge; report the edge sample.
    report.v_star = best->v;
    report.pe_max = best->pe_steady;
  } else {
    const Optimum opt = golden_section_maximize(pe_of_v, lo, hi, 1e-7 * (hi - lo));
    report.v_star = opt.argmax;
    report.pe_max = opt.max;
  }
  return report;
}

}  // namespace qfriction
