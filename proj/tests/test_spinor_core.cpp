#include "generators.hpp"

#include "zbsim/ion_map.hpp"
#include "zbsim/spinor_core.hpp"

#include <doctest.h>

#include <cmath>

using namespace zbsim;
using zbsim::testing::Gen;
using zbsim::testing::max_abs;
using cd = std::complex<double>;

TEST_CASE("Dirac matrices satisfy the Clifford algebra") {
  const Eigen::Matrix4cd id = Eigen::Matrix4cd::Identity();
  const Eigen::Matrix4cd b = beta<double>();
  CHECK(max_abs(b * b - id) == 0.0);
  for (int i = 0; i < 3; ++i) {
    const Eigen::Matrix4cd ai = alpha<double>(i);
    CHECK(max_abs(ai * b + b * ai) == 0.0);
    CHECK(max_abs(ai.adjoint() - ai) == 0.0);
    for (int j = 0; j < 3; ++j) {
      const Eigen::Matrix4cd aj = alpha<double>(j);
      CHECK(max_abs(ai * aj + aj * ai - (i == j ? 2.0 : 0.0) * id) == 0.0);
    }
  }
}

TEST_CASE("Pauli matrices: sigma_x sigma_y = i sigma_z") {
  const cd i(0, 1);
  CHECK(max_abs(pauli<double>(0) * pauli<double>(1) - i * pauli<double>(2)) == 0.0);
  CHECK_THROWS_AS(pauli<double>(3), std::out_of_range);
}

TEST_CASE("u and v at p = (0,0,3), m = 4 match hand-computed values") {
  const Momentum3 p(0, 0, 3);
  const double r = 1.0 / (2.0 * std::sqrt(2.0));
  Bispinor u_expected(3 * r, 0, r, 0);
  Bispinor v_expected(0, -r, 0, 3 * r);
  CHECK(max_abs(make_u(p, Pseudospin::up, 4.0) - u_expected) < 1e-15);
  CHECK(max_abs(make_v(p, Pseudospin::down, 4.0) - v_expected) < 1e-15);
}

TEST_CASE("at rest u and v reduce to the upper and lower unit spinors") {
  const Momentum3 zero;
  CHECK(max_abs(make_u(zero, Pseudospin::up, 2.0) - Bispinor(1, 0, 0, 0)) == 0.0);
  CHECK(max_abs(make_u(zero, Pseudospin::down, 2.0) - Bispinor(0, 1, 0, 0)) == 0.0);
  CHECK(max_abs(make_v(zero, Pseudospin::up, 2.0) - Bispinor(0, 0, 1, 0)) == 0.0);
  CHECK(max_abs(make_v(zero, Pseudospin::down, 2.0) - Bispinor(0, 0, 0, 1)) == 0.0);
}

TEST_CASE("property: normalization and orthogonality over random (p, m)") {
  Gen gen(11);
  for (int trial = 0; trial < 500; ++trial) {
    const Momentum3 p = gen.momentum();
    const double m = gen.mass();
    const double e = energy(p, m);
    const double scale = e / m;
    for (Pseudospin s : kPseudospins) {
      for (Pseudospin r : kPseudospins) {
        const double delta = s == r ? 1.0 : 0.0;
        const Bispinor us = make_u(p, s, m), ur = make_u(p, r, m);
        const Bispinor vs = make_v(p, s, m), vr = make_v(p, r, m);
        CHECK(std::abs(us.dot(ur) - scale * delta) < 1e-12 * scale);
        CHECK(std::abs(vs.dot(vr) - scale * delta) < 1e-12 * scale);
        CHECK(std::abs(dirac_bilinear(us, ur) - delta) < 1e-12 * scale);
        CHECK(std::abs(dirac_bilinear(vs, vr) + delta) < 1e-12 * scale);
        CHECK(std::abs(make_u(p, s, m).dot(make_v(-p, r, m))) < 1e-12 * scale);
      }
    }
  }
}

TEST_CASE("property: u and v are eigenvectors of the free Dirac Hamiltonian") {
  Gen gen(12);
  for (int trial = 0; trial < 200; ++trial) {
    const Momentum3 p = gen.momentum(1e-1, 1e1);
    const double m = gen.mass(1e-1, 1e1);
    Eigen::Matrix4cd h = m * beta<double>();
    for (int k = 0; k < 3; ++k) h += p[k] * alpha<double>(k);
    const double e = energy(p, m);
    for (Pseudospin s : kPseudospins) {
      const Bispinor u = make_u(p, s, m);
      const Bispinor v = make_v(-p, s, m);
      CHECK(max_abs(h * u - e * u) < 1e-11 * e * e);
      CHECK(max_abs(h * v + e * v) < 1e-11 * e * e);
    }
  }
}

TEST_CASE("property: velocity expectation of u is p/E") {
  Gen gen(13);
  for (int trial = 0; trial < 200; ++trial) {
    const Momentum3 p = gen.momentum();
    const double m = gen.mass();
    const double e = energy(p, m);
    for (Pseudospin s : kPseudospins) {
      const Bispinor u = make_u(p, s, m);
      const CVec3 a = alpha_bilinear(u, u) * (m / e);
      CHECK(max_abs(a - (p.vec() / e).cast<cd>()) < 1e-12);
    }
  }
}

TEST_CASE("helicity spinors diagonalize sigma.p with eigenvalue 2s|p|") {
  Gen gen(14);
  for (int trial = 0; trial < 200; ++trial) {
    const Momentum3 p = gen.momentum();
    const Vec3 n = p.vec() / p.norm();
    for (Pseudospin s : kPseudospins) {
      const TwoSpinor x = helicity_chi(n, s);
      CHECK(std::abs(x.norm() - 1.0) < 1e-14);
      CHECK(max_abs(sigma_dot(n) * x - static_cast<double>(sign(s)) * x) < 1e-13);
    }
    CHECK(std::abs(helicity_chi(n, Pseudospin::up).dot(helicity_chi(n, Pseudospin::down))) < 1e-14);
  }
  CHECK(max_abs(helicity_chi(Vec3(0, 0, 1), Pseudospin::up) - chi<double>(Pseudospin::up)) == 0.0);
  CHECK(max_abs(helicity_chi(Vec3(0, 0, 1), Pseudospin::down) - chi<double>(Pseudospin::down)) == 0.0);
}

TEST_CASE("mode matrix is unitary") {
  Gen gen(15);
  for (int trial = 0; trial < 100; ++trial) {
    const Eigen::Matrix4cd s = mode_transform(gen.momentum(), gen.mass());
    CHECK(max_abs(s.adjoint() * s - Eigen::Matrix4cd::Identity()) < 1e-12);
  }
}

TEST_CASE("templated scalar: long double spinors normalize beyond double precision") {
  using L = long double;
  const BasicMomentum3<L> p(0.3L, -1.1L, 0.7L);
  const L m = 0.9L;
  const auto u = make_u(p, Pseudospin::up, m);
  const L e = energy(p, m);
  CHECK(static_cast<double>(std::abs(u.dot(u) - e / m)) < 1e-17);
  const auto v = make_v(p, Pseudospin::down, m);
  CHECK(static_cast<double>(std::abs(dirac_bilinear(v, v) + L(1))) < 1e-17);
}

TEST_CASE("pseudospin parsing and preconditions") {
  CHECK(pseudospin_from_value(0.5) == Pseudospin::up);
  CHECK(pseudospin_from_value(-0.5) == Pseudospin::down);
  CHECK_THROWS_AS(pseudospin_from_value(1.0), std::invalid_argument);
  CHECK(max_abs(chi<double>(-0.5) - TwoSpinor(0, 1)) == 0.0);
  CHECK_THROWS(make_u(Momentum3(1, 0, 0), Pseudospin::up, 0.0));
  CHECK_THROWS(make_v(Momentum3(1, 0, 0), Pseudospin::up, -1.0));
  CHECK_THROWS(energy(Momentum3(1, 0, 0), -1.0));
}

TEST_CASE("perturbed spinors move by at most the amplitude per component") {
  std::mt19937_64 rng(3);
  const Bispinor u = make_u(Momentum3(1, 2, 3), Pseudospin::up, 1.0);
  const Bispinor w = perturbed(u, 1e-6, rng);
  CHECK(max_abs(w - u) > 0.0);
  CHECK(max_abs(w - u) <= std::sqrt(2.0) * 1e-6);
  CHECK(max_abs(perturbed(u, 0.0, rng) - u) == 0.0);
}
