// qfriction: command-line front end for the quasi-static moving-atom model.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qfriction/classical.hpp"
#include "qfriction/constants.hpp"
#include "qfriction/dynamics.hpp"
#include "qfriction/errors.hpp"
#include "qfriction/friction.hpp"
#include "qfriction/optimize.hpp"
#include "qfriction/rates.hpp"
#include "qfriction/spp_modes.hpp"
#include "qfriction/sweep.hpp"
#include "qfriction/table.hpp"
#include "qfriction/units.hpp"

using namespace qfriction;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitConvergence = 3;

// Raised when the oracle check ran fine but failed its agreement bound.
struct OracleFailure {};

struct GlobalOptions {
  std::string format = "csv";
  std::string out;
  double rel_tol = 1e-12;
  unsigned threads = 0;
  std::string config_path;

  std::string omega0;
  std::string omega_sp;
  std::string material;
  std::string d;
  std::string v;
  std::string gamma_eg;
};

// Partially specified scenario; fields stay empty until a file or flag sets them.
struct PartialConfig {
  std::optional<double> omega0, omega_sp, d, v, gamma_eg;
};

PartialConfig load_config(const GlobalOptions& g) {
  PartialConfig pc;
  if (!g.config_path.empty()) {
    std::ifstream in(g.config_path);
    if (!in) throw UsageError("--config: cannot open " + g.config_path);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw UsageError(std::string("--config: invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw UsageError("--config: top level must be an object");
    auto number = [&](const char* key) -> std::optional<double> {
      if (!j.contains(key)) return std::nullopt;
      if (!j[key].is_number()) throw UsageError(std::string("--config: ") + key + " must be a number");
      return j[key].get<double>();
    };
    pc.omega0 = number("omega0_radps");
    pc.omega_sp = number("omega_sp_radps");
    pc.d = number("d_m");
    pc.v = number("v_mps");
    pc.gamma_eg = number("gamma_eg_Cm");
    if (j.contains("material")) {
      if (!j["material"].is_string()) throw UsageError("--config: material must be a string");
      if (pc.omega_sp) throw UsageError("--config: give omega_sp_radps or material, not both");
      pc.omega_sp = find_preset(j["material"].get<std::string>()).omega_sp;
    }
  }
  if (!g.omega0.empty()) pc.omega0 = parse_frequency(g.omega0);
  if (!g.material.empty() && !g.omega_sp.empty()) throw UsageError("give --omega-sp or --material, not both");
  if (!g.material.empty()) pc.omega_sp = find_preset(g.material).omega_sp;
  if (!g.omega_sp.empty()) pc.omega_sp = parse_frequency(g.omega_sp);
  if (!g.d.empty()) pc.d = parse_distance(g.d);
  if (!g.v.empty()) pc.v = parse_velocity(g.v);
  if (!g.gamma_eg.empty()) pc.gamma_eg = parse_dipole(g.gamma_eg);
  return pc;
}

SystemConfig require_full(const PartialConfig& pc, bool omega0_defaults_to_sp = false) {
  std::vector<std::string> missing;
  if (!pc.omega0 && !(omega0_defaults_to_sp && pc.omega_sp)) missing.emplace_back("omega0");
  if (!pc.omega_sp) missing.emplace_back("omega_sp (or material)");
  if (!pc.d) missing.emplace_back("d");
  if (!pc.v) missing.emplace_back("v");
  if (!pc.gamma_eg) missing.emplace_back("gamma_eg");
  if (!missing.empty()) {
    std::string msg = "missing config fields:";
    for (const auto& m : missing) msg += " " + m;
    throw UsageError(msg);
  }
  SystemConfig c{pc.omega0 ? *pc.omega0 : *pc.omega_sp, *pc.omega_sp, *pc.d, *pc.v, *pc.gamma_eg};
  try {
    c.validate();
  } catch (const DomainError& e) {
    throw UsageError(std::string("config: ") + e.what());
  }
  for (const auto& w : c.warnings()) std::cerr << "warning: " << w << '\n';
  return c;
}

QuadratureSettings quadrature(const GlobalOptions& g) {
  QuadratureSettings s;
  s.rel_tol = g.rel_tol;
  try {
    s.validate();
  } catch (const DomainError& e) {
    throw UsageError(std::string("--rel-tol: ") + e.what());
  }
  return s;
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw UsageError("--out: cannot open " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

SweepAxis parse_axis(const std::string& text, const char* field) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
  if (parts.size() != 4 && parts.size() != 5) {
    throw UsageError(std::string(field) + ": expected name:min:max:count[:log|:linear]");
  }
  SweepAxis axis;
  axis.name = parse_axis_name(parts[0]);
  auto value = [&](const std::string& s) {
    switch (axis.name) {
      case AxisName::v: return parse_velocity(s);
      case AxisName::d: return parse_distance(s);
      case AxisName::omega0: return parse_frequency(s);
      default: {
        std::size_t used = 0;
        double x = 0.0;
        try {
          x = std::stod(s, &used);
        } catch (const std::exception&) {
          used = 0;
        }
        if (used != s.size() || s.empty()) throw UsageError(std::string(field) + ": bad number '" + s + "'");
        return x;
      }
    }
  };
  axis.min = value(parts[1]);
  axis.max = value(parts[2]);
  try {
    std::size_t used = 0;
    axis.count = std::stoi(parts[3], &used);
    if (used != parts[3].size()) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw UsageError(std::string(field) + ".count: bad integer '" + parts[3] + "'");
  }
  if (parts.size() == 5) {
    if (parts[4] == "log") {
      axis.scale = AxisScale::log;
    } else if (parts[4] != "linear") {
      throw UsageError(std::string(field) + ".scale must be linear or log");
    }
  }
  return axis;
}

Cell cell(const std::optional<double>& v) { return v ? Cell{*v} : Cell{}; }

// --- subcommands -----------------------------------------------------------

int cmd_rates(const GlobalOptions& g) {
  const SystemConfig c = require_full(load_config(g));
  const auto s = quadrature(g);
  const RatePair pair = gamma_pair(c, s);
  const NormalizedParams p = normalize(c);
  Table t{{"a", "b", "g_plus", "g_minus", "gamma_plus", "gamma_minus", "gamma_total", "im_c_int_zz"}, {}};
  t.add_row({p.a, p.b, pair.g_plus, pair.g_minus, pair.gamma_plus, pair.gamma_minus, gamma_total(pair),
             im_c_int_zz(c, s)});
  Output out(g.out);
  write_table(out.stream(), t, parse_format(g.format));
  return 0;
}

struct EvolveOptions {
  double p0 = 1.0;
  std::optional<double> t_final;
  double relaxation_times = 10.0;
  int samples = 101;
  std::string method = "closed";
  double ode_tol = 1e-9;
};

int cmd_evolve(const GlobalOptions& g, const EvolveOptions& o) {
  const SystemConfig c = require_full(load_config(g));
  const RatePair pair = gamma_pair(c, quadrature(g));
  if (!(o.p0 >= 0.0 && o.p0 <= 1.0)) throw UsageError("--p0 must lie in [0, 1]");
  if (o.samples < 2) throw UsageError("--samples must be at least 2");
  const double total = pair.gamma_plus + pair.gamma_minus;
  double t_final = 0.0;
  if (o.t_final) {
    t_final = *o.t_final;
  } else {
    if (!(total > 0.0)) throw UsageError("both rates vanish; give --t-final explicitly");
    t_final = o.relaxation_times / total;
  }
  if (!(t_final > 0.0)) throw UsageError("--t-final must be positive");

  std::vector<double> grid(static_cast<std::size_t>(o.samples));
  for (int i = 0; i < o.samples; ++i) grid[static_cast<std::size_t>(i)] = t_final * i / (o.samples - 1);
  grid.back() = t_final;

  Table t{{"t_seconds", "p_e"}, {}};
  if (o.method == "closed") {
    for (double ti : grid) t.add_row({ti, pe_closed_form(pair, o.p0, ti)});
  } else if (o.method == "ode") {
    const PopulationTrajectory traj = evolve_ode(pair, o.p0, grid, o.ode_tol);
    for (const auto& s : traj.samples) t.add_row({s.t, s.p_e});
  } else {
    throw UsageError("--method must be closed or ode");
  }
  Output out(g.out);
  write_table(out.stream(), t, parse_format(g.format));
  return 0;
}

int cmd_steady(const GlobalOptions& g) {
  const SystemConfig c = require_full(load_config(g));
  const RatePair pair = gamma_pair(c, quadrature(g));
  const double p = pe_steady(pair);
  const AtomPolarizability atom{c.omega0, c.gamma_eg};
  const double gamma_cl = classical_decay_rate(atom, im_c_int_zz(c, quadrature(g)));
  if (high_q_violated(atom, gamma_cl)) std::cerr << "warning: Gamma_cl/omega0 > 1e-3; perturbative rate is suspect\n";
  Table t{{"pe_steady", "sigma_z", "gamma_total", "detailed_balance_residual", "gamma_classical", "gamma_free_space"},
          {}};
  t.add_row({p, sigma_z_expectation({p}), gamma_total(pair), detailed_balance_residual(pair, p), gamma_cl,
             free_space_rate(atom)});
  Output out(g.out);
  write_table(out.stream(), t, parse_format(g.format));
  return 0;
}

int cmd_friction(const GlobalOptions& g, const std::optional<double>& p_e) {
  const SystemConfig c = require_full(load_config(g));
  const RatePair pair = gamma_pair(c, quadrature(g));
  double p = 0.0;
  FrictionResult f;
  if (p_e) {
    if (!(*p_e >= 0.0 && *p_e <= 1.0)) throw UsageError("--p-e must lie in [0, 1]");
    p = *p_e;
    f = friction_force(c, pair, p);
  } else {
    p = pe_steady(pair);
    f = friction_steady(c, pair);
  }
  Table t{{"p_e", "force_n", "power_w", "normalized_force", "normalized_power"}, {}};
  t.add_row({p, f.force, f.power, f.normalized_force, f.normalized_power});
  Output out(g.out);
  write_table(out.stream(), t, parse_format(g.format));
  return 0;
}

struct SweepOptions {
  std::string axis1;
  std::string axis2;
  std::string quantity = "pe_steady";
  std::optional<double> a;
  std::optional<double> b;
};

int cmd_sweep(const GlobalOptions& g, const SweepOptions& o) {
  SweepSpec spec;
  spec.axis1 = parse_axis(o.axis1, "axis1");
  if (!o.axis2.empty()) spec.axis2 = parse_axis(o.axis2, "axis2");
  spec.quantity = parse_quantity(o.quantity);
  if (spec.normalized_mode()) {
    spec.fixed_normalized = {o.a.value_or(0.0), o.b.value_or(0.0)};
  } else {
    PartialConfig pc = load_config(g);
    // Swept fields need no fixed value.
    auto placeholder = [&](AxisName n, std::optional<double>& field) {
      if (spec.axis1.name == n || (spec.axis2 && spec.axis2->name == n)) field = field.value_or(1.0);
    };
    placeholder(AxisName::v, pc.v);
    placeholder(AxisName::d, pc.d);
    placeholder(AxisName::omega0, pc.omega0);
    spec.fixed = require_full(pc, true);
  }
  const SweepGrid grid = run_sweep(spec, quadrature(g), g.threads);

  Table t;
  t.columns.emplace_back(to_string(spec.axis1.name));
  if (spec.axis2) t.columns.emplace_back(to_string(spec.axis2->name));
  t.columns.emplace_back(to_string(spec.quantity));
  for (const auto& r : grid.records) {
    std::vector<Cell> row{r.x1};
    if (spec.axis2) row.push_back(cell(r.x2));
    row.push_back(cell(r.value));
    t.add_row(std::move(row));
  }
  Output out(g.out);
  write_table(out.stream(), t, parse_format(g.format));
  return 0;
}

struct OptimizeOptions {
  std::string objective = "pe_steady_diag";
  double lo = 0.01;
  double hi = 1.0;
  double tol = 1e-6;
  double a_fixed = kDefaultBoundaryA;
};

int cmd_optimize(const GlobalOptions& g, const OptimizeOptions& o) {
  Objective objective;
  if (o.objective == "pe_steady_diag") {
    objective = Objective::pe_steady_diag;
  } else if (o.objective == "normalized_force_boundary") {
    objective = Objective::normalized_force_boundary;
  } else {
    throw UsageError("--objective must be pe_steady_diag or normalized_force_boundary");
  }
  const Optimum opt = optimize_1d(objective, o.lo, o.hi, o.tol, o.a_fixed, quadrature(g));
  Table t{{"objective", "argmax", "max", "evaluations"}, {}};
  t.add_row({o.objective, opt.argmax, opt.max, static_cast<long>(opt.evaluations)});
  Output out(g.out);
  write_table(out.stream(), t, parse_format(g.format));
  return 0;
}

struct ReportOptions {
  std::string v_min = "0.01c";
  std::string v_max = "0.45c";
  int v_count = 441;
};

int cmd_report(const GlobalOptions& g, const ReportOptions& o) {
  PartialConfig pc = load_config(g);
  if (!pc.omega_sp) throw UsageError("report needs --material or --omega-sp");
  if (!pc.d) throw UsageError("report needs --d");
  if (!pc.gamma_eg) throw UsageError("report needs --gamma-eg");
  const MaterialPreset preset =
      g.material.empty() ? MaterialPreset{"custom", *pc.omega_sp} : find_preset(g.material);
  const double omega0 = pc.omega0.value_or(preset.omega_sp);
  const VelocityRange range{parse_velocity(o.v_min), parse_velocity(o.v_max), o.v_count};
  if (range.max / PhysicalConstants::c > kWarnBeta) {
    std::cerr << "warning: velocities above 0.3c; relativistic corrections are neglected\n";
  }
  const PhysicalReport rep = physical_report(preset, *pc.d, omega0, *pc.gamma_eg, range, quadrature(g), g.threads);

  Table records{{"v_mps", "v_over_c", "pe_steady", "gamma_plus", "gamma_minus", "force_n", "power_w"}, {}};
  for (const auto& r : rep.records) {
    records.add_row({r.v, r.v / PhysicalConstants::c, r.pe_steady, r.gamma_plus, r.gamma_minus, r.force, r.power});
  }
  const double v_star_over_wd = rep.v_star / (preset.omega_sp * *pc.d);
  Table summary{{"v_star_mps", "v_star_over_c", "v_star_over_omega_sp_d", "pe_max"}, {}};
  summary.add_row({rep.v_star, rep.v_star / PhysicalConstants::c, v_star_over_wd, rep.pe_max});

  Output out(g.out);
  if (parse_format(g.format) == OutputFormat::csv) {
    write_csv(out.stream(), records);
    out.stream() << '\n';
    write_csv(out.stream(), summary);
  } else {
    std::ostringstream rec_json;
    write_json(rec_json, records);
    nlohmann::ordered_json doc;
    doc["records"] = nlohmann::ordered_json::parse(rec_json.str());
    doc["v_star_mps"] = rep.v_star;
    doc["v_star_over_c"] = rep.v_star / PhysicalConstants::c;
    doc["v_star_over_omega_sp_d"] = v_star_over_wd;
    doc["pe_max"] = rep.pe_max;
    out.stream() << doc.dump(2) << '\n';
  }
  return 0;
}

struct OracleOptions {
  int levels = kDefaultLevels;
  std::string broadening = "gaussian";
};

// The reference matrix of (a, b) pairs realized at d = 3 nm, v = 0.1c.
std::vector<SystemConfig> oracle_matrix() {
  constexpr NormalizedParams kPairs[] = {{0.1, 0.148}, {0.5, 1.0}, {1.0, 1.62}, {2.0, 1.0}, {0.1, 1.62}};
  std::vector<SystemConfig> out;
  for (const auto& p : kPairs) out.push_back(config_from_normalized(p, 3e-9, 0.1 * PhysicalConstants::c, 1e-29));
  return out;
}

int cmd_oracle_check(const GlobalOptions& g, const OracleOptions& o) {
  const PartialConfig pc = load_config(g);
  const bool any = pc.omega0 || pc.omega_sp || pc.d || pc.v || pc.gamma_eg;
  const std::vector<SystemConfig> configs = any ? std::vector<SystemConfig>{require_full(pc)} : oracle_matrix();
  Broadening broadening;
  if (o.broadening == "gaussian") {
    broadening = Broadening::gaussian;
  } else if (o.broadening == "lorentzian") {
    broadening = Broadening::lorentzian;
  } else {
    throw UsageError("--broadening must be gaussian or lorentzian");
  }
  if (o.levels < 1 || o.levels > 6) throw UsageError("--levels must lie in [1, 6]");

  Table t{{"config", "a", "b", "level", "dk_times_d", "err_gamma_plus", "err_gamma_minus", "err_force", "pass"}, {}};
  bool all_pass = true;
  for (std::size_t i = 0; i < configs.size(); ++i) {
    const auto& c = configs[i];
    const NormalizedParams p = normalize(c);
    const auto records = refinement_study(c, default_schedule(c, o.levels, broadening), quadrature(g), g.threads);
    const bool pass = refinement_passes(records);
    all_pass = all_pass && pass;
    for (const auto& r : records) {
      t.add_row({static_cast<long>(i), p.a, p.b, static_cast<long>(r.level), r.dk_times_d, r.err_gamma_plus,
                 r.err_gamma_minus, r.err_force, std::string(pass ? "true" : "false")});
    }
  }
  Output out(g.out);
  write_table(out.stream(), t, parse_format(g.format));
  if (!all_pass) throw OracleFailure{};
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quasi-static quantum friction and motion-induced emission rates of a two-level atom"};
  app.require_subcommand(1);

  GlobalOptions g;
  app.add_option("--format", g.format, "Output format: csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", g.out, "Output file (default: standard output)");
  app.add_option("--rel-tol", g.rel_tol, "Kernel quadrature relative tolerance");
  app.add_option("--threads", g.threads, "Worker threads, 0 = one per hardware thread");
  app.add_option("--config", g.config_path, "JSON config file; flags override its values");
  app.add_option("--omega0", g.omega0, "Atomic transition frequency, e.g. 646THz or 4.06e15rad/s");
  app.add_option("--omega-sp", g.omega_sp, "Surface-plasmon resonance frequency");
  app.add_option("--material", g.material, "Material preset supplying omega_sp (silver)");
  app.add_option("--d", g.d, "Atom-surface distance, e.g. 3nm");
  app.add_option("--v", g.v, "Slab velocity relative to the atom, e.g. 0.273c or 8e7m/s");
  app.add_option("--gamma-eg", g.gamma_eg, "Transition dipole in C m, e.g. 1e-29Cm");

  auto* rates = app.add_subcommand("rates", "Quasi-static transition rates and Im C_int,zz");
  auto* evolve = app.add_subcommand("evolve", "Excited-state population versus time");
  auto* steady = app.add_subcommand("steady", "Stationary population and detailed balance");
  auto* friction = app.add_subcommand("friction", "Friction force and radiated power");
  auto* sweep = app.add_subcommand("sweep", "1-D or 2-D parameter sweep");
  auto* optimize = app.add_subcommand("optimize", "Golden-section search for optima in normalized (a, b) space");
  auto* report = app.add_subcommand("report", "Velocity scan for a material preset");
  auto* oracle = app.add_subcommand("oracle-check", "Brute-force mode sum against closed forms");
  for (auto* sub : {rates, evolve, steady, friction, sweep, optimize, report, oracle}) sub->fallthrough();

  EvolveOptions eo;
  evolve->add_option("--p0", eo.p0, "Initial excited-state probability");
  evolve->add_option("--t-final", eo.t_final, "Final time in seconds (default: relaxation times)");
  evolve->add_option("--relaxation-times", eo.relaxation_times, "Span in units of 1/(G+ + G-)");
  evolve->add_option("--samples", eo.samples, "Number of output samples");
  evolve->add_option("--method", eo.method, "closed or ode");
  evolve->add_option("--ode-tol", eo.ode_tol, "Integrator relative tolerance");

  std::optional<double> p_e;
  friction->add_option("--p-e", p_e, "Instantaneous excited-state probability (default: stationary)");

  SweepOptions so;
  sweep->add_option("--axis1", so.axis1, "name:min:max:count[:log]")->required();
  sweep->add_option("--axis2", so.axis2, "name:min:max:count[:log]");
  sweep->add_option("--quantity", so.quantity, "pe_steady, gamma_total, normalized_force, ...");
  sweep->add_option("--a", so.a, "Fixed a for normalized 1-D sweeps over b");
  sweep->add_option("--b", so.b, "Fixed b for normalized 1-D sweeps over a");

  OptimizeOptions oo;
  optimize->add_option("--objective", oo.objective, "pe_steady_diag or normalized_force_boundary");
  optimize->add_option("--lo", oo.lo, "Bracket lower end (b)");
  optimize->add_option("--hi", oo.hi, "Bracket upper end (b)");
  optimize->add_option("--tol", oo.tol, "Bracket width at termination");
  optimize->add_option("--a-fixed", oo.a_fixed, "a used by normalized_force_boundary");

  ReportOptions ro;
  report->add_option("--v-min", ro.v_min, "Lowest velocity");
  report->add_option("--v-max", ro.v_max, "Highest velocity");
  report->add_option("--v-count", ro.v_count, "Number of velocities");

  OracleOptions orc;
  oracle->add_option("--levels", orc.levels, "Refinement levels (dk halves per level)");
  oracle->add_option("--broadening", orc.broadening, "gaussian or lorentzian");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*rates) return cmd_rates(g);
    if (*evolve) return cmd_evolve(g, eo);
    if (*steady) return cmd_steady(g);
    if (*friction) return cmd_friction(g, p_e);
    if (*sweep) return cmd_sweep(g, so);
    if (*optimize) return cmd_optimize(g, oo);
    if (*report) return cmd_report(g, ro);
    if (*oracle) return cmd_oracle_check(g, orc);
  } catch (const OracleFailure&) {
    std::cerr << "error: mode-sum oracle disagrees with the closed forms beyond 1%\n";
    return kExitConvergence;
  } catch (const ConvergenceError& e) {
    std::cerr << "error: " << e.what() << " (last estimates " << e.previous_estimate << ", " << e.last_estimate
              << ")\n";
    return kExitConvergence;
  } catch (const IntegrationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConvergence;
  } catch (const OptimizationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConvergence;
  } catch (const std::exception& e) {
    // Usage, domain, cutoff and degenerate-input errors all trace back to the invocation.
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
