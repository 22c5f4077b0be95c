#include "qfriction/classical.hpp"

#include <cmath>

#include "qfriction/constants.hpp"

namespace qfriction {

namespace {

double cube(double x) { return x * x * x; }

}  // namespace

double AtomPolarizability::gamma0() const {
  return gamma_eg * gamma_eg / (6.0 * kPi * PhysicalConstants::eps0 * PhysicalConstants::hbar) *
         cube(omega0 / PhysicalConstants::c);
}

std::complex<double> inverse_polarizability(const AtomPolarizability& atom, std::complex<double> omega) {
  const double w0 = atom.omega0;
  const double g0 = atom.gamma0();
  const double scale = PhysicalConstants::hbar * w0 * PhysicalConstants::eps0 / (atom.gamma_eg * atom.gamma_eg);
  const std::complex<double> i(0.0, 1.0);
  return scale * ((g0 * g0 + w0 * w0 - omega * omega) / (2.0 * w0 * w0) - i * g0 * omega / (w0 * w0));
}

double free_space_rate(const AtomPolarizability& atom) {
  return atom.gamma_eg * atom.gamma_eg / (3.0 * kPi * PhysicalConstants::eps0 * PhysicalConstants::hbar) *
         cube(atom.omega0 / PhysicalConstants::c);
}

double classical_decay_rate(const AtomPolarizability& atom, double im_c_int_zz) {
  const double free_space = cube(atom.omega0 / PhysicalConstants::c) / (6.0 * kPi);
  return 2.0 / (PhysicalConstants::hbar * PhysicalConstants::eps0) * atom.gamma_eg * atom.gamma_eg *
         (free_space + im_c_int_zz);
}

std::complex<double> characteristic_residual(const AtomPolarizability& atom, std::complex<double> omega,
                                             std::complex<double> c_int_zz) {
  return atom.gamma_eg * atom.gamma_eg * (inverse_polarizability(atom, omega) - c_int_zz);
}

bool high_q_violated(const AtomPolarizability& atom, double gamma_cl) {
  return std::abs(gamma_cl) / atom.omega0 > 1e-3;
}

}  // namespace qfriction
