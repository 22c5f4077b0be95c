#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qfriction/config.hpp"
#include "qfriction/quadrature.hpp"

namespace qfriction {

enum class AxisName { a, b, v, d, omega0 };
enum class AxisScale { linear, log };
enum class Quantity { pe_steady, gamma_total, normalized_force, normalized_power, gamma_plus, gamma_minus };

std::string_view to_string(AxisName name);
std::string_view to_string(Quantity quantity);
AxisName parse_axis_name(std::string_view text);
Quantity parse_quantity(std::string_view text);

struct SweepAxis {
  AxisName name = AxisName::a;
  double min = 0.0;
  double max = 0.0;
  int count = 2;
  AxisScale scale = AxisScale::linear;

  // Sample points; endpoints are hit exactly.
  std::vector<double> values() const;
};

// A 1-D or 2-D sweep. Axes a/b run in normalized mode (kernel values only,
// rates reported as g values); v/d/omega0 run on the physical `fixed`
// config. The two families cannot be mixed. In normalized mode a missing
// a or b axis is taken from `fixed_normalized`.
struct SweepSpec {
  SweepAxis axis1;
  std::optional<SweepAxis> axis2;
  SystemConfig fixed;
  NormalizedParams fixed_normalized;
  Quantity quantity = Quantity::pe_steady;

  bool normalized_mode() const;
  // Throws UsageError naming the offending field.
  void validate() const;
};

struct SweepRecord {
  double x1 = 0.0;
  std::optional<double> x2;
  std::optional<double> value;  // empty where the quantity is undefined (v = 0, both rates zero)
};

// Row-major: axis1 outer, axis2 inner.
struct SweepGrid {
  SweepSpec spec;
  std::vector<SweepRecord> records;
};

// Evaluates the quantity at a single point of the sweep space.
std::optional<double> evaluate_point(const SweepSpec& spec, double x1, std::optional<double> x2,
                                     const QuadratureSettings& settings = {});

SweepGrid run_sweep(const SweepSpec& spec, const QuadratureSettings& settings = {}, unsigned threads = 0);

struct MaterialPreset {
  std::string name;
  double omega_sp = 0.0;  // rad/s
};

// Shipped presets; "silver" has omega_sp / 2 pi = 646 THz.
const std::vector<MaterialPreset>& material_presets();
const MaterialPreset& find_preset(std::string_view name);

struct VelocityRange {
  double min = 0.0;  // m/s
  double max = 0.0;  // m/s
  int count = 2;
};

struct ReportRecord {
  double v = 0.0;
  double pe_steady = 0.0;
  double gamma_plus = 0.0;
  double gamma_minus = 0.0;
  double force = 0.0;
  double power = 0.0;
};

struct PhysicalReport {
  std::vector<ReportRecord> records;
  double v_star = 0.0;  // m/s, maximizer of P_inf over the range
  double pe_max = 0.0;
};

// P_inf, rates, stationary force and power across v_range (linear spacing,
// v > 0), plus the velocity maximizing P_inf refined by golden section.
PhysicalReport physical_report(const MaterialPreset& preset, double d, double omega0, double gamma_eg,
                               VelocityRange v_range, const QuadratureSettings& settings = {}, unsigned threads = 0);

}  // namespace qfriction
