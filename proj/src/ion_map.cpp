#include "zbsim/ion_map.hpp"

#include <cmath>
#include <stdexcept>

namespace zbsim {

Bispinor bispinor_from_levels(const IonLevelAmplitudes& amps, const Tolerances& tol) {
  if (std::abs(amps.norm_squared() - 1.0) > tol.normalization) {
    throw std::invalid_argument("ionic level populations must sum to 1");
  }
  return Bispinor(amps.psi_a, amps.psi_b, amps.psi_c, amps.psi_d);
}

IonLevelAmplitudes levels_from_bispinor(const Bispinor& b) { return {b(0), b(1), b(2), b(3)}; }

Eigen::Matrix4cd mode_transform(const Momentum3& p, double m) {
  if (!(m > 0.0)) throw std::invalid_argument("mode transform requires m > 0");
  const double w = std::sqrt(m / energy(p, m));
  Eigen::Matrix4cd s;
  s.col(0) = w * make_u(p, Pseudospin::up, m);
  s.col(1) = w * make_u(p, Pseudospin::down, m);
  s.col(2) = w * make_v(-p, Pseudospin::up, m);
  s.col(3) = w * make_v(-p, Pseudospin::down, m);
  return s;
}

DiracParams ion_params_to_dirac(const IonParams& ip) {
  if (!(ip.eta > 0.0 && ip.delta > 0.0 && ip.omega_tilde > 0.0 && ip.omega > 0.0 && ip.hbar > 0.0)) {
    throw std::invalid_argument("ion parameters must be strictly positive");
  }
  DiracParams d;
  d.c_eff = 2.0 * ip.eta * ip.delta * ip.omega_tilde;
  d.m_eff = ip.hbar * ip.omega / (d.c_eff * d.c_eff);
  d.compton_length = ip.hbar / (d.m_eff * d.c_eff);
  d.zb_freq_rest = 2.0 * d.m_eff * d.c_eff * d.c_eff / ip.hbar;
  return d;
}

}  // namespace zbsim
