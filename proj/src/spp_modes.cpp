#include "qfriction/spp_modes.hpp"

#include <algorithm>
#include <cmath>

#include "qfriction/constants.hpp"
#include "qfriction/dynamics.hpp"
#include "qfriction/errors.hpp"
#include "qfriction/friction.hpp"
#include "qfriction/parallel.hpp"

namespace qfriction {

double DrudeSlab::permittivity(double omega, double z) const {
  if (z >= 0.0) return PhysicalConstants::eps0;
  return PhysicalConstants::eps0 * (1.0 - 2.0 * omega_sp * omega_sp / (omega * omega));
}

double dispersive_weight(Side side) { return side == Side::above ? 1.0 : 3.0; }

double SPPMode::k_parallel() const { return std::hypot(kx, ky); }

SPPMode make_mode(double kx, double ky, double area, double omega_sp) {
  const double k = std::hypot(kx, ky);
  if (!(k > 0.0)) throw DomainError("make_mode: k_parallel must be positive");
  if (!(area > 0.0)) throw DomainError("make_mode: area must be positive");
  return SPPMode{kx, ky, std::sqrt(1.0 / (2.0 * k * PhysicalConstants::eps0 * area)), omega_sp};
}

std::array<std::complex<double>, 3> mode_field(const SPPMode& mode, double x, double y, double z) {
  const double k = mode.k_parallel();
  const std::complex<double> i(0.0, 1.0);
  const std::complex<double> phi = mode.amplitude * std::exp(i * (mode.kx * x + mode.ky * y)) * std::exp(-k * std::abs(z));
  const double sign_z = z > 0.0 ? 1.0 : (z < 0.0 ? -1.0 : 0.0);
  return {-i * mode.kx * phi, -i * mode.ky * phi, k * sign_z * phi};
}

double mode_field_z_sq(const SPPMode& mode, double z) {
  const double k = mode.k_parallel();
  return k * k * mode.amplitude * mode.amplitude * std::exp(-2.0 * k * std::abs(z));
}

double mode_normalization(const SPPMode& mode, double area) {
  // |E|^2 = 2 k^2 |A|^2 exp(-2k|z|) in both half spaces, and
  // int_0^inf exp(-2kz) dz = 1/(2k).
  const double k = mode.k_parallel();
  const double per_region = 2.0 * k * k * mode.amplitude * mode.amplitude / (2.0 * k);
  const double weights = (dispersive_weight(Side::above) + dispersive_weight(Side::below)) * PhysicalConstants::eps0;
  return 0.5 * area * per_region * weights;
}

double ModeGrid::area() const {
  const double side = 2.0 * kPi / dk;
  return side * side;
}

long ModeGrid::half_count() const { return static_cast<long>(std::floor(k_max / dk + 1e-9)); }

void ModeGrid::validate() const {
  if (!(dk > 0.0)) throw PreconditionError("ModeGrid: dk must be positive");
  if (!(k_max / dk >= 64.0)) throw PreconditionError("ModeGrid: k_max/dk must be at least 64");
  if (!(eta > 0.0)) throw PreconditionError("ModeGrid: eta must be positive");
}

double broadened_delta(const ModeGrid& grid, double x) {
  const double eta = grid.eta;
  if (grid.broadening == Broadening::lorentzian) return eta / (kPi * (x * x + eta * eta));
  const double s = x / eta;
  return std::exp(-0.5 * s * s) / (eta * std::sqrt(2.0 * kPi));
}

ModeGrid default_grid(const SystemConfig& config, int level, Broadening broadening) {
  const double speed = std::abs(config.v);
  if (speed == 0.0) throw DegenerateInputError("default_grid: v = 0");
  ModeGrid grid;
  grid.dk = kDefaultCoarsestStep / (std::ldexp(1.0, level) * config.d);
  grid.k_max = std::max(30.0 / config.d, 3.0 * (config.omega0 + config.omega_sp) / speed);
  grid.eta = kDefaultBroadeningCells * speed * grid.dk;
  grid.broadening = broadening;
  return grid;
}

std::vector<ModeGrid> default_schedule(const SystemConfig& config, int levels, Broadening broadening) {
  std::vector<ModeGrid> out;
  for (int level = 0; level < levels; ++level) out.push_back(default_grid(config, level, broadening));
  return out;
}

ModeSpectrum build_spectrum(const ModeGrid& grid, double d, unsigned threads) {
  grid.validate();
  if (!(d > 0.0)) throw DomainError("build_spectrum: d must be positive");
  const long n = grid.half_count();
  const std::size_t columns = static_cast<std::size_t>(2 * n + 1);
  const double area = grid.area();

  ModeSpectrum s;
  s.grid = grid;
  s.d = d;
  s.kx.resize(columns);
  s.upper.resize(columns);
  s.lower.resize(columns);
  s.axis.resize(columns);

  parallel_for(columns, threads, [&](std::size_t col) {
    const double kx = static_cast<double>(static_cast<long>(col) - n) * grid.dk;
    std::vector<double> up(static_cast<std::size_t>(n));
    std::vector<double> down(static_cast<std::size_t>(n));
    // The omega argument does not enter |E_z|^2; the grid is frequency agnostic.
    for (long j = 1; j <= n; ++j) {
      const double ky = static_cast<double>(j) * grid.dk;
      up[static_cast<std::size_t>(j - 1)] = mode_field_z_sq(make_mode(kx, ky, area, 0.0), d);
      down[static_cast<std::size_t>(j - 1)] = mode_field_z_sq(make_mode(kx, -ky, area, 0.0), d);
    }
    s.kx[col] = kx;
    s.upper[col] = pairwise_sum(up);
    s.lower[col] = pairwise_sum(down);
    s.axis[col] = kx == 0.0 ? 0.0 : mode_field_z_sq(make_mode(kx, 0.0, area, 0.0), d);
  });
  return s;
}

namespace {

void check_oracle_preconditions(const SystemConfig& config, const ModeGrid& grid, double omega) {
  if (config.v == 0.0) throw DegenerateInputError("mode sum: v = 0 puts the resonance line at infinity");
  grid.validate();
  const double speed = std::abs(config.v);
  if (grid.eta < 3.0 * speed * grid.dk * (1.0 - 1e-12)) {
    throw PreconditionError("mode sum: eta must be at least 3 |v| dk to resolve the resonance line");
  }
  const double k_plus = std::abs(omega - config.omega_sp) / speed;
  const double k_minus = std::abs(omega + config.omega_sp) / speed;
  if (std::max(k_plus, k_minus) > grid.k_max) {
    throw CutoffError("mode sum: resonance line lies beyond k_max");
  }
}

void check_spectrum(const SystemConfig& config, const ModeSpectrum& spectrum) {
  if (spectrum.d != config.d) throw DomainError("mode sum: spectrum was built for a different distance");
}

// sum_kx C(kx) w(kx) delta(wsp + kx v - sign * omega), pairwise in k_x order.
template <class Weight>
double line_sum(const SystemConfig& config, const ModeSpectrum& s, double omega, double sign, Weight&& weight) {
  std::vector<double> terms(s.kx.size());
  for (std::size_t i = 0; i < s.kx.size(); ++i) {
    const double mismatch = config.omega_sp + s.kx[i] * config.v - sign * omega;
    terms[i] = s.column(i) * weight(s.kx[i]) * broadened_delta(s.grid, mismatch);
  }
  return pairwise_sum(terms);
}

constexpr auto unit_weight = [](double) { return 1.0; };
constexpr auto kx_weight = [](double kx) { return kx; };

}  // namespace

RatePair brute_force_rates(const SystemConfig& config, const ModeSpectrum& spectrum) {
  config.validate();
  check_oracle_preconditions(config, spectrum.grid, config.omega0);
  check_spectrum(config, spectrum);
  const double coupling = kPi / PhysicalConstants::hbar * config.omega_sp * config.gamma_eg * config.gamma_eg;
  RatePair pair;
  pair.gamma_plus = coupling * line_sum(config, spectrum, config.omega0, +1.0, unit_weight);
  pair.gamma_minus = coupling * line_sum(config, spectrum, config.omega0, -1.0, unit_weight);
  const double prefactor = rate_prefactor(config);
  pair.g_plus = pair.gamma_plus / prefactor;
  pair.g_minus = pair.gamma_minus / prefactor;
  return pair;
}

RatePair brute_force_rates(const SystemConfig& config, const ModeGrid& grid, unsigned threads) {
  config.validate();
  check_oracle_preconditions(config, grid, config.omega0);
  return brute_force_rates(config, build_spectrum(grid, config.d, threads));
}

double anti_hermitian_c_zz(const SystemConfig& config, const ModeSpectrum& spectrum, double omega) {
  config.validate();
  check_oracle_preconditions(config, spectrum.grid, omega);
  check_spectrum(config, spectrum);
  // (pi wsp / 2) sum |E_z|^2 [delta(w' - w) - delta(w' + w)], times eps0.
  const double scale = PhysicalConstants::eps0 * kPi * config.omega_sp / 2.0;
  return scale * (line_sum(config, spectrum, omega, +1.0, unit_weight) -
                  line_sum(config, spectrum, omega, -1.0, unit_weight));
}

double anti_hermitian_c_zz(const SystemConfig& config, const ModeGrid& grid, double omega, unsigned threads) {
  config.validate();
  check_oracle_preconditions(config, grid, omega);
  return anti_hermitian_c_zz(config, build_spectrum(grid, config.d, threads), omega);
}

double brute_force_friction(const SystemConfig& config, const ModeSpectrum& spectrum, double p_e) {
  config.validate();
  check_oracle_preconditions(config, spectrum.grid, config.omega0);
  check_spectrum(config, spectrum);
  if (!(p_e >= 0.0 && p_e <= 1.0)) throw DomainError("brute_force_friction: p_e must lie in [0, 1]");
  const double coupling = kPi * config.omega_sp * config.gamma_eg * config.gamma_eg;
  const double down = line_sum(config, spectrum, config.omega0, +1.0, kx_weight);
  const double up = line_sum(config, spectrum, config.omega0, -1.0, kx_weight);
  return -p_e * coupling * down - (1.0 - p_e) * coupling * up;
}

double brute_force_friction(const SystemConfig& config, const ModeGrid& grid, double p_e, unsigned threads) {
  config.validate();
  check_oracle_preconditions(config, grid, config.omega0);
  return brute_force_friction(config, build_spectrum(grid, config.d, threads), p_e);
}

double RefinementRecord::max_error() const { return std::max({err_gamma_plus, err_gamma_minus, err_force}); }

std::vector<RefinementRecord> refinement_study(const SystemConfig& config, const std::vector<ModeGrid>& schedule,
                                               const QuadratureSettings& settings, unsigned threads) {
  const RatePair closed = gamma_pair(config, settings);
  const double p_inf = pe_steady(closed);
  const double closed_force = friction_steady(config, closed).force;
  auto rel = [](double value, double reference) { return std::abs(value / reference - 1.0); };

  std::vector<RefinementRecord> out;
  for (std::size_t level = 0; level < schedule.size(); ++level) {
    const ModeGrid& grid = schedule[level];
    check_oracle_preconditions(config, grid, config.omega0);
    const ModeSpectrum spectrum = build_spectrum(grid, config.d, threads);
    const RatePair brute = brute_force_rates(config, spectrum);
    RefinementRecord r;
    r.level = static_cast<int>(level);
    r.dk_times_d = grid.dk * config.d;
    r.gamma_plus = brute.gamma_plus;
    r.gamma_minus = brute.gamma_minus;
    r.force = brute_force_friction(config, spectrum, p_inf);
    r.closed_gamma_plus = closed.gamma_plus;
    r.closed_gamma_minus = closed.gamma_minus;
    r.closed_force = closed_force;
    r.err_gamma_plus = rel(r.gamma_plus, closed.gamma_plus);
    r.err_gamma_minus = rel(r.gamma_minus, closed.gamma_minus);
    r.err_force = rel(r.force, closed_force);
    out.push_back(r);
  }
  return out;
}

bool refinement_passes(const std::vector<RefinementRecord>& records) {
  if (records.empty()) return false;
  if (!(records.back().max_error() <= kOracleTolerance)) return false;
  constexpr double kFloor = 0.005;
  constexpr double kMinReduction = 1.5;
  for (std::size_t i = 1; i < records.size(); ++i) {
    const auto& prev = records[i - 1];
    const auto& cur = records[i];
    const std::array<std::pair<double, double>, 3> channels{{{prev.err_gamma_plus, cur.err_gamma_plus},
                                                             {prev.err_gamma_minus, cur.err_gamma_minus},
                                                             {prev.err_force, cur.err_force}}};
    for (const auto& [before, after] : channels) {
      if (before >= kFloor && !(after * kMinReduction <= before)) return false;
    }
  }
  return true;
}

}  // namespace qfriction
