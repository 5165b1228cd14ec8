#include "zbsim/pair_coeffs.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace zbsim {

namespace {

void require_positive_mass(double m) {
  if (!(m > 0.0)) throw std::invalid_argument("current coefficients require m > 0");
}

}  // namespace

Vec3 classical_coeff(const Momentum3& p, Pseudospin s, Pseudospin s_prime, double m) {
  require_positive_mass(m);
  const double weight = m / energy(p, m);
  return (weight * alpha_bilinear(make_u(p, s, m), make_u(p, s_prime, m))).real();
}

CVec3 pair_coeff(const Momentum3& p, const TwoSpinor& chi_e, const TwoSpinor& chi_f, double m) {
  require_positive_mass(m);
  const double weight = m / energy(p, m);
  return weight * alpha_bilinear(make_u(p, chi_e, m), make_v(-p, chi_f, m));
}

CVec3 pair_coeff(const Momentum3& p, Pseudospin s, Pseudospin s_prime, double m) {
  return pair_coeff(p, chi(s), chi(s_prime), m);
}

CVec3 helicity_pair_coeff(const Momentum3& p, Pseudospin s, Pseudospin s_prime, double m) {
  return pair_coeff(p, helicity_chi(p.vec(), s), helicity_chi(p.vec(), s_prime), m);
}

CoefficientReport check_closed_form(const Momentum3& p, double m) {
  require_positive_mass(m);
  const PolarizationTriad triad = make_triad(p);

  CoefficientReport report;
  report.p = p;
  report.m = m;
  report.energy = energy(p, m);
  const double ratio = m / report.energy;
  const double sqrt2 = std::sqrt(2.0);

  std::size_t slot = 0;
  for (Pseudospin s : kPseudospins) {
    for (Pseudospin sp : kPseudospins) {
      PairEntry& e = report.entries[slot++];
      e.s = s;
      e.s_prime = sp;
      e.classical = classical_coeff(p, s, sp, m);
      e.pair = pair_coeff(p, s, sp, m);
      e.components = project_on_triad(e.pair, triad);
      e.helicity_pair = helicity_pair_coeff(p, s, sp, m);
      e.helicity_components = project_on_triad(e.helicity_pair, triad);

      const bool diagonal = s == sp;
      e.expected_longitudinal = diagonal ? sign(s) * ratio : 0.0;
      e.expected_transverse = diagonal ? 0.0 : sqrt2;

      const TriadComponents& h = e.helicity_components;
      e.residual = std::max({std::abs(h.par - e.expected_longitudinal),
                             std::abs(h.transverse_norm() - e.expected_transverse)});
      report.residual_vs_closed_form = std::max(report.residual_vs_closed_form, e.residual);

      const Vec3 expected_classical = diagonal ? Vec3(p.vec() / report.energy) : Vec3::Zero();
      report.classical_residual = std::max(
          report.classical_residual, (e.classical - expected_classical).cwiseAbs().maxCoeff());
      report.reconstruction_residual = std::max(
          {report.reconstruction_residual,
           (reconstruct(e.components, triad) - e.pair).cwiseAbs().maxCoeff(),
           (reconstruct(h, triad) - e.helicity_pair).cwiseAbs().maxCoeff()});
    }
  }
  return report;
}

}  // namespace zbsim
