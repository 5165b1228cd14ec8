#pragma once

// Dirac-representation matrices and the momentum-space plane-wave spinors
// u(p,s), v(p,s) of the free Dirac field.  Natural units, hbar = c = 1.
//
//   beta    = diag(I2, -I2)
//   alpha_k = [[0, sigma_k], [sigma_k, 0]]
//   u(p,s)  = N (chi_s, sigma.p/(E+m) chi_s)
//   v(p,s)  = N (sigma.p/(E+m) chi_s, chi_s),      N = sqrt((E+m)/2m)
//
// chi_s are sigma_z eigenvectors with zero phase unless a different
// two-spinor is passed explicitly (see helicity_chi).

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

namespace zbsim {

template <typename Real>
using Vec3T = Eigen::Matrix<Real, 3, 1>;
template <typename Real>
using CVec3T = Eigen::Matrix<std::complex<Real>, 3, 1>;
template <typename Real>
using TwoSpinorT = Eigen::Matrix<std::complex<Real>, 2, 1>;
template <typename Real>
using BispinorT = Eigen::Matrix<std::complex<Real>, 4, 1>;
template <typename Real>
using Matrix2cT = Eigen::Matrix<std::complex<Real>, 2, 2>;
template <typename Real>
using Matrix4cT = Eigen::Matrix<std::complex<Real>, 4, 4>;

using Vec3 = Vec3T<double>;
using CVec3 = CVec3T<double>;
using TwoSpinor = TwoSpinorT<double>;
using Bispinor = BispinorT<double>;

/// Three real momentum components.
template <typename Real>
class BasicMomentum3 {
 public:
  BasicMomentum3() : v_(Vec3T<Real>::Zero()) {}
  BasicMomentum3(Real p1, Real p2, Real p3) : v_(p1, p2, p3) {}
  explicit BasicMomentum3(const Vec3T<Real>& v) : v_(v) {}

  Real p1() const { return v_(0); }
  Real p2() const { return v_(1); }
  Real p3() const { return v_(2); }
  Real operator[](int k) const { return v_(k); }

  const Vec3T<Real>& vec() const { return v_; }
  Real norm() const { return v_.norm(); }
  Real squared_norm() const { return v_.squaredNorm(); }
  bool is_zero() const { return v_.isZero(Real(0)); }

  BasicMomentum3 operator-() const { return BasicMomentum3(Vec3T<Real>(-v_)); }
  friend bool operator==(const BasicMomentum3& a, const BasicMomentum3& b) {
    return a.v_ == b.v_;
  }

 private:
  Vec3T<Real> v_;
};

using Momentum3 = BasicMomentum3<double>;

/// Pseudospin index s = +1/2 or -1/2.
enum class Pseudospin { up, down };

inline constexpr Pseudospin kPseudospins[2] = {Pseudospin::up, Pseudospin::down};

inline double value(Pseudospin s) { return s == Pseudospin::up ? 0.5 : -0.5; }
inline int sign(Pseudospin s) { return s == Pseudospin::up ? 1 : -1; }
inline int index(Pseudospin s) { return s == Pseudospin::up ? 0 : 1; }

inline Pseudospin pseudospin_from_value(double s) {
  if (s == 0.5) return Pseudospin::up;
  if (s == -0.5) return Pseudospin::down;
  throw std::invalid_argument("pseudospin must be +1/2 or -1/2");
}

template <typename Real>
Real energy(const BasicMomentum3<Real>& p, Real m) {
  if (!(m >= Real(0))) throw std::invalid_argument("mass must be non-negative");
  return std::sqrt(p.squared_norm() + m * m);
}

template <typename Real>
Matrix2cT<Real> pauli(int k) {
  using C = std::complex<Real>;
  Matrix2cT<Real> s;
  switch (k) {
    case 0: s << C(0), C(1), C(1), C(0); break;
    case 1: s << C(0), C(0, -1), C(0, 1), C(0); break;
    case 2: s << C(1), C(0), C(0), C(-1); break;
    default: throw std::out_of_range("pauli index must be 0, 1 or 2");
  }
  return s;
}

template <typename Real>
Matrix4cT<Real> alpha(int k) {
  Matrix4cT<Real> a = Matrix4cT<Real>::Zero();
  a.template topRightCorner<2, 2>() = pauli<Real>(k);
  a.template bottomLeftCorner<2, 2>() = pauli<Real>(k);
  return a;
}

template <typename Real>
Matrix4cT<Real> beta() {
  Matrix4cT<Real> b = Matrix4cT<Real>::Identity();
  b.template bottomRightCorner<2, 2>() *= Real(-1);
  return b;
}

/// sigma . p
template <typename Real>
Matrix2cT<Real> sigma_dot(const Vec3T<Real>& p) {
  return pauli<Real>(0) * p(0) + pauli<Real>(1) * p(1) + pauli<Real>(2) * p(2);
}

template <typename Real = double>
TwoSpinorT<Real> chi(Pseudospin s) {
  return s == Pseudospin::up ? TwoSpinorT<Real>(1, 0) : TwoSpinorT<Real>(0, 1);
}

template <typename Real = double>
TwoSpinorT<Real> chi(double s) {
  return chi<Real>(pseudospin_from_value(s));
}

/// Eigenvector of sigma.n with eigenvalue sign(s), for a unit direction n.
/// For n = +z this reduces to chi(s); elsewhere the phase is fixed by making
/// the first nonzero component of the up state real and positive, and
/// down = -i sigma_y up*.
template <typename Real>
TwoSpinorT<Real> helicity_chi(const Vec3T<Real>& direction, Pseudospin s) {
  using C = std::complex<Real>;
  const Real n = direction.norm();
  if (!(n > Real(0))) throw std::invalid_argument("helicity axis must be nonzero");
  const Vec3T<Real> d = direction / n;
  const Real theta = std::acos(std::clamp(d(2), Real(-1), Real(1)));
  const Real phi = (d(0) == Real(0) && d(1) == Real(0)) ? Real(0) : std::atan2(d(1), d(0));
  const C eiphi = std::polar(Real(1), phi);
  const TwoSpinorT<Real> up(C(std::cos(theta / 2)), eiphi * std::sin(theta / 2));
  if (s == Pseudospin::up) return up;
  return TwoSpinorT<Real>(-std::conj(up(1)), std::conj(up(0)));
}

namespace detail {

template <typename Real>
void require_positive_mass(Real m) {
  if (!(m > Real(0))) {
    throw std::invalid_argument("spinor normalization sqrt((E+m)/2m) requires m > 0");
  }
}

}  // namespace detail

template <typename Real>
BispinorT<Real> make_u(const BasicMomentum3<Real>& p, const TwoSpinorT<Real>& x, Real m) {
  detail::require_positive_mass(m);
  const Real e = energy(p, m);
  const Real norm = std::sqrt((e + m) / (2 * m));
  BispinorT<Real> u;
  u.template head<2>() = norm * x;
  u.template tail<2>() = (norm / (e + m)) * (sigma_dot<Real>(p.vec()) * x);
  return u;
}

template <typename Real>
BispinorT<Real> make_v(const BasicMomentum3<Real>& p, const TwoSpinorT<Real>& x, Real m) {
  detail::require_positive_mass(m);
  const Real e = energy(p, m);
  const Real norm = std::sqrt((e + m) / (2 * m));
  BispinorT<Real> v;
  v.template head<2>() = (norm / (e + m)) * (sigma_dot<Real>(p.vec()) * x);
  v.template tail<2>() = norm * x;
  return v;
}

template <typename Real>
BispinorT<Real> make_u(const BasicMomentum3<Real>& p, Pseudospin s, Real m) {
  return make_u(p, chi<Real>(s), m);
}

template <typename Real>
BispinorT<Real> make_v(const BasicMomentum3<Real>& p, Pseudospin s, Real m) {
  return make_v(p, chi<Real>(s), m);
}

/// psi-bar phi = psi^dagger beta phi
template <typename Real>
std::complex<Real> dirac_bilinear(const BispinorT<Real>& a, const BispinorT<Real>& b) {
  return a.dot(beta<Real>() * b);
}

/// Componentwise a^dagger alpha_k b.
template <typename Real>
CVec3T<Real> alpha_bilinear(const BispinorT<Real>& a, const BispinorT<Real>& b) {
  CVec3T<Real> out;
  for (int k = 0; k < 3; ++k) out(k) = a.dot(alpha<Real>(k) * b);
  return out;
}

/// Adds independent uniform noise of the given amplitude to every real and
/// imaginary part.  Only used for fault injection in the verify suites.
template <typename Real>
BispinorT<Real> perturbed(const BispinorT<Real>& b, Real amplitude, std::mt19937_64& rng) {
  if (amplitude == Real(0)) return b;
  std::uniform_real_distribution<Real> noise(-amplitude, amplitude);
  BispinorT<Real> out = b;
  for (int i = 0; i < 4; ++i) out(i) += std::complex<Real>(noise(rng), noise(rng));
  return out;
}

}  // namespace zbsim
