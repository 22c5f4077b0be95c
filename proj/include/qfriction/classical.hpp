#pragma once

#include <complex>

namespace qfriction {

// Two-level atom seen as a classical z-oriented dipole.
struct AtomPolarizability {
  double omega0 = 0.0;    // rad/s
  double gamma_eg = 0.0;  // C m

  // Gamma_0 = gamma_eg^2 omega0^3 / (6 pi eps0 hbar c^3)
  double gamma0() const;
};

// alpha_e^-1(omega) = (hbar w0 eps0 / gamma^2) [(G0^2 + w0^2 - w^2)/(2 w0^2) - i G0 w / w0^2]
std::complex<double> inverse_polarizability(const AtomPolarizability& atom, std::complex<double> omega);

// Gamma_sp = gamma_eg^2 omega0^3 / (3 pi eps0 hbar c^3) = 2 Gamma_0.
double free_space_rate(const AtomPolarizability& atom);

// Gamma_cl = -2 omega'' = (2 gamma^2 / (hbar eps0)) [(w0/c)^3 / (6 pi) + Im C_int,zz].
double classical_decay_rate(const AtomPolarizability& atom, double im_c_int_zz);

// gamma^2 [alpha_e^-1(omega) - C_int,zz]; zero at a natural frequency.
std::complex<double> characteristic_residual(const AtomPolarizability& atom, std::complex<double> omega,
                                             std::complex<double> c_int_zz);

// Perturbative imaginary frequency shift omega'' = -Gamma_cl / 2.
inline double perturbative_omega_imag(const AtomPolarizability& atom, double im_c_int_zz) {
  return -0.5 * classical_decay_rate(atom, im_c_int_zz);
}

// Perturbation theory assumes a high-Q resonance; true when Gamma_cl/w0 > 1e-3.
bool high_q_violated(const AtomPolarizability& atom, double gamma_cl);

}  // namespace qfriction
