#pragma once

// Trapped-ion encoding of the Dirac bispinor.
//
// Levels |a>, |b>, |c>, |d> carry Dirac components 1..4 in that order.  The
// ion couplings define an effective light speed and mass
//   c_eff = 2 eta Delta Omega_tilde,   m_eff = hbar Omega / c_eff^2.

#include "zbsim/config.hpp"
#include "zbsim/spinor_core.hpp"

namespace zbsim {

struct IonLevelAmplitudes {
  std::complex<double> psi_a;
  std::complex<double> psi_b;
  std::complex<double> psi_c;
  std::complex<double> psi_d;

  double norm_squared() const {
    return std::norm(psi_a) + std::norm(psi_b) + std::norm(psi_c) + std::norm(psi_d);
  }
};

/// Rejects amplitudes whose total population differs from 1 by more than
/// tol.normalization.
Bispinor bispinor_from_levels(const IonLevelAmplitudes& amps,
                              const Tolerances& tol = kDefaultTolerances);
IonLevelAmplitudes levels_from_bispinor(const Bispinor& b);

/// Unitary with columns sqrt(m/E) {u(p,+), u(p,-), v(-p,+), v(-p,-)}.
/// S^dagger takes level amplitudes to e / f^dagger mode amplitudes at p.
Eigen::Matrix4cd mode_transform(const Momentum3& p, double m);

struct IonParams {
  double eta = 0.0;          // Lamb-Dicke parameter
  double delta = 0.0;        // spatial scale of the motional coupling
  double omega_tilde = 0.0;  // coupling Rabi frequency
  double omega = 0.0;        // carrier Rabi frequency
  double hbar = 1.0;
};

struct DiracParams {
  double c_eff = 0.0;
  double m_eff = 0.0;
  double compton_length = 0.0;  // hbar / (m c)
  double zb_freq_rest = 0.0;    // 2 m c^2 / hbar
};

DiracParams ion_params_to_dirac(const IonParams& params);

}  // namespace zbsim
