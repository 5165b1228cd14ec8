#pragma once

// Spin-1 polarization triad attached to a momentum p:
//
//   eta_+ = 1/(sqrt2 |p|) ( (p1 p3 - i p2|p|)/(p1 - i p2), (p2 p3 + i p1|p|)/(p1 - i p2), -(p1 + i p2) )
//   eta_- = 1/(sqrt2 |p|) ( (p1 p3 + i p2|p|)/(p1 + i p2), (p2 p3 - i p1|p|)/(p1 + i p2), -(p1 - i p2) )
//   eta_par = p/|p|
//
// The transverse vectors have a removable 0/0 on the p3 axis.
//   p3 > 0: eta_+- = (1, +-i, 0)/sqrt2, the limit from every direction.
//   p3 < 0: the limit depends on the approach angle; we take the one reached
//           from p1 > 0, p2 = 0, i.e. eta_+ = (-1, i, 0)/sqrt2 and
//           eta_- = (-1, -i, 0)/sqrt2, with eta_par = (0, 0, -1).
//
// Inner products conjugate the left argument.

#include "zbsim/spinor_core.hpp"

#include <array>
#include <stdexcept>

namespace zbsim {

template <typename Real>
struct BasicPolarizationTriad {
  CVec3T<Real> eta_plus;
  CVec3T<Real> eta_minus;
  Vec3T<Real> eta_par;

  /// eta_+, eta_-, eta_par as complex columns.
  Eigen::Matrix<std::complex<Real>, 3, 3> columns() const {
    Eigen::Matrix<std::complex<Real>, 3, 3> c;
    c.col(0) = eta_plus;
    c.col(1) = eta_minus;
    c.col(2) = eta_par.template cast<std::complex<Real>>();
    return c;
  }
};

using PolarizationTriad = BasicPolarizationTriad<double>;

template <typename Real>
struct BasicTriadComponents {
  std::complex<Real> plus;
  std::complex<Real> minus;
  std::complex<Real> par;

  Real transverse_norm() const { return std::sqrt(std::norm(plus) + std::norm(minus)); }
};

using TriadComponents = BasicTriadComponents<double>;

template <typename Real>
BasicPolarizationTriad<Real> make_triad(const BasicMomentum3<Real>& p) {
  using C = std::complex<Real>;
  const Real norm = p.norm();
  if (!(norm > Real(0))) {
    throw std::invalid_argument("polarization triad undefined at p = 0");
  }
  const Real p1 = p.p1(), p2 = p.p2(), p3 = p.p3();
  const Real inv_sqrt2 = Real(1) / std::sqrt(Real(2));
  const C i(0, 1);

  BasicPolarizationTriad<Real> t;
  t.eta_par = p.vec() / norm;

  if (p1 == Real(0) && p2 == Real(0)) {
    const Real x = p3 > Real(0) ? Real(1) : Real(-1);
    t.eta_plus = CVec3T<Real>(C(x), i, C(0)) * inv_sqrt2;
    t.eta_minus = CVec3T<Real>(C(x), -i, C(0)) * inv_sqrt2;
    return t;
  }

  const C minus_i = C(p1, -p2);  // p1 - i p2
  const C plus_i = C(p1, p2);    // p1 + i p2
  const Real scale = inv_sqrt2 / norm;
  t.eta_plus = CVec3T<Real>((C(p1 * p3) - i * (p2 * norm)) / minus_i,
                            (C(p2 * p3) + i * (p1 * norm)) / minus_i,
                            -plus_i) * scale;
  t.eta_minus = CVec3T<Real>((C(p1 * p3) + i * (p2 * norm)) / plus_i,
                             (C(p2 * p3) - i * (p1 * norm)) / plus_i,
                             -minus_i) * scale;
  return t;
}

template <typename Real>
BasicTriadComponents<Real> project_on_triad(const CVec3T<Real>& vec,
                                            const BasicPolarizationTriad<Real>& triad) {
  return {triad.eta_plus.dot(vec), triad.eta_minus.dot(vec),
          triad.eta_par.template cast<std::complex<Real>>().dot(vec)};
}

template <typename Real>
CVec3T<Real> reconstruct(const BasicTriadComponents<Real>& c,
                         const BasicPolarizationTriad<Real>& triad) {
  return c.plus * triad.eta_plus + c.minus * triad.eta_minus +
         c.par * triad.eta_par.template cast<std::complex<Real>>();
}

/// The transverse part c_+ eta_+ + c_- eta_-.
template <typename Real>
CVec3T<Real> transverse_part(const BasicTriadComponents<Real>& c,
                             const BasicPolarizationTriad<Real>& triad) {
  return c.plus * triad.eta_plus + c.minus * triad.eta_minus;
}

template <typename Real>
CVec3T<Real> longitudinal_part(const BasicTriadComponents<Real>& c,
                               const BasicPolarizationTriad<Real>& triad) {
  return c.par * triad.eta_par.template cast<std::complex<Real>>();
}

}  // namespace zbsim
