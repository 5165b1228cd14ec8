#include "generators.hpp"

#include "zbsim/fock_sim.hpp"
#include "zbsim/spectral.hpp"

#include <doctest.h>
#include <unsupported/Eigen/KroneckerProduct>

#include <array>
#include <cmath>
#include <vector>

using namespace zbsim;
using zbsim::testing::Gen;
using zbsim::testing::max_abs;
using cd = std::complex<double>;
using Dense = Eigen::MatrixXcd;

namespace {

// Jordan-Wigner annihilator as a Kronecker product, highest mode leftmost:
// I x ... x I x a x Z x ... x Z with a = |0><1| and Z = diag(1, -1).
Dense kron_annihilator(std::size_t modes, std::size_t i) {
  Dense a(2, 2), z(2, 2), id = Dense::Identity(2, 2);
  a << 0, 1, 0, 0;
  z << 1, 0, 0, -1;
  Dense out = Dense::Identity(1, 1);
  for (std::size_t bit = modes; bit-- > 0;) {
    const Dense& factor = bit > i ? id : (bit == i ? a : z);
    out = Dense(Eigen::kroneckerProduct(out, factor));
  }
  return out;
}

// Current from the field expansion psi = sum_j phi_j O_j with
// (O, phi, k) = (e(p,s), sqrt(m/E) u(p,s), p) and (f^dagger(p,s), sqrt(m/E) v(p,s), -p).
std::array<Dense, 3> oracle_current(const ModeGrid& grid) {
  struct Term {
    FockOperator op;
    Bispinor phi;
    Vec3 k;
  };
  const std::size_t modes = grid.mode_count();
  const double m = grid.mass();
  std::vector<Term> terms;
  for (std::size_t k = 0; k < grid.momentum_count(); ++k) {
    const Momentum3& p = grid.momenta()[k];
    const double w = std::sqrt(m / energy(p, m));
    for (Pseudospin s : kPseudospins) {
      const Dense ce = kron_annihilator(modes, grid.mode_index({k, s, Species::e}));
      const Dense cf = kron_annihilator(modes, grid.mode_index({k, s, Species::f}));
      terms.push_back({ce.sparseView(), w * make_u(p, s, m), p.vec()});
      terms.push_back({Dense(cf.adjoint()).sparseView(), w * make_v(p, s, m), -p.vec()});
    }
  }
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << modes);
  std::array<Dense, 3> current{Dense::Zero(dim, dim), Dense::Zero(dim, dim), Dense::Zero(dim, dim)};
  for (const Term& a : terms) {
    for (const Term& b : terms) {
      if ((a.k - b.k).norm() != 0.0) continue;
      const Dense prod = Dense(FockOperator(FockOperator(a.op.adjoint()) * b.op));
      const CVec3 c = alpha_bilinear(a.phi, b.phi);
      for (int i = 0; i < 3; ++i) current[i] += c(i) * prod;
    }
  }
  return current;
}

}  // namespace

TEST_CASE("mode grid validation") {
  CHECK_NOTHROW(ModeGrid({Momentum3(0, 0, 1), Momentum3(0, 0, -1)}, 1.0));
  CHECK_THROWS_AS(ModeGrid({Momentum3(0, 0, 1)}, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(ModeGrid({Momentum3(0, 0, 1), Momentum3(0, 0, -1)}, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(ModeGrid({Momentum3(0, 0, 1), Momentum3(0, 0, -1), Momentum3(0, 0, 1)}, 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(ModeGrid({Momentum3(), Momentum3(0, 0, 1), Momentum3(0, 0, -1)}, 1.0), std::invalid_argument);
  CHECK_NOTHROW(ModeGrid({Momentum3(), Momentum3(0, 0, 1), Momentum3(0, 0, -1)}, 1.0, GridOptions{true}));
}

TEST_CASE("mode ordering: momentum, then +1/2 before -1/2, then e before f") {
  const ModeGrid g = ModeGrid::symmetric(Momentum3(1, 2, 3), 2.0);
  CHECK(g.mode_count() == 8);
  CHECK(g.mode_index({0, Pseudospin::up, Species::e}) == 0);
  CHECK(g.mode_index({0, Pseudospin::up, Species::f}) == 1);
  CHECK(g.mode_index({0, Pseudospin::down, Species::e}) == 2);
  CHECK(g.mode_index({1, Pseudospin::down, Species::f}) == 7);
  for (std::size_t i = 0; i < g.mode_count(); ++i) CHECK(g.mode_index(g.mode_at(i)) == i);
  CHECK(g.negated(0) == 1);
  CHECK(g.find(Momentum3(-1, -2, -3)) == std::optional<std::size_t>(1));
  CHECK_FALSE(g.find(Momentum3(1, 1, 1)).has_value());
}

TEST_CASE("ladder operators equal the Kronecker-product Jordan-Wigner construction") {
  const FockBasis basis(6);
  for (std::size_t i = 0; i < 6; ++i) {
    const Dense expected = kron_annihilator(6, i);
    CHECK(max_abs(Dense(ladder(basis, i, LadderKind::annihilate)) - expected) == 0.0);
    CHECK(max_abs(Dense(ladder(basis, i, LadderKind::create)) - expected.adjoint()) == 0.0);
  }
}

TEST_CASE("canonical anticommutation relations on 8 modes") {
  const FockBasis basis(8);
  const FockOperator id = identity_operator(basis);
  for (std::size_t i = 0; i < 8; ++i) {
    const FockOperator ai = ladder(basis, i, LadderKind::annihilate);
    for (std::size_t j = 0; j < 8; ++j) {
      const FockOperator aj = ladder(basis, j, LadderKind::annihilate);
      const FockOperator cj = ladder(basis, j, LadderKind::create);
      const FockOperator expected = i == j ? id : FockOperator(id * cd(0));
      CHECK(max_abs(FockOperator(anticommutator(ai, cj) - expected)) == 0.0);
      CHECK(max_abs(anticommutator(ai, aj)) == 0.0);
    }
  }
}

TEST_CASE("capacity limit") {
  const ModeGrid g({Momentum3(0, 0, 1), Momentum3(0, 0, -1), Momentum3(1, 0, 0), Momentum3(-1, 0, 0),
                    Momentum3(0, 1, 0), Momentum3(0, -1, 0)},
                   1.0);
  CHECK_THROWS_AS(build_basis(g), CapacityError);
  CHECK(build_basis(ModeGrid::symmetric(Momentum3(0, 0, 1), 1.0, Momentum3(1, 0, 0))).dimension() == 65536);
}

TEST_CASE("total current equals the field-expansion oracle") {
  Gen gen(41);
  for (int trial = 0; trial < 3; ++trial) {
    const ModeGrid g = ModeGrid::symmetric(gen.momentum(1e-1, 1e1), gen.mass(1e-1, 1e1));
    const CurrentDecomposition cur = build_current(g);
    const std::array<Dense, 3> oracle = oracle_current(g);
    for (int k = 0; k < 3; ++k) CHECK(max_abs(Dense(cur.total[k]) - oracle[k]) < 1e-12);
  }
}

TEST_CASE("property: I = v + z_perp + z_par and all parts are Hermitian") {
  Gen gen(42);
  for (int trial = 0; trial < 10; ++trial) {
    const ModeGrid g = ModeGrid::symmetric(gen.momentum(), gen.mass());
    const CurrentDecomposition cur = build_current(g);
    CHECK(decomposition_residual(cur) < 1e-12);
    for (int k = 0; k < 3; ++k) {
      CHECK(hermiticity_defect(cur.total[k]) < 1e-14);
      CHECK(hermiticity_defect(cur.classical[k]) == 0.0);
      CHECK(hermiticity_defect(cur.z_perp[k]) < 1e-14);
      CHECK(hermiticity_defect(cur.z_par[k]) < 1e-14);
    }
  }
}

TEST_CASE("vacuum carries no current and spinor noise breaks the identity") {
  const ModeGrid g = ModeGrid::symmetric(Momentum3(0, 0, 3), 4.0);
  const FockBasis basis = build_basis(g);
  const StateVector vac = create_state(basis, {});
  CHECK(expectation(vac, build_current(g).total).norm() < 1e-12);
  const double noisy = decomposition_residual(build_current(g, 1e-6));
  CHECK(noisy > 1e-7);
  CHECK(noisy < 1e-4);
}

TEST_CASE("create_state applies the rightmost operator first") {
  const FockBasis basis(4);
  const std::array<std::size_t, 2> ij{1, 3};
  const std::array<std::size_t, 2> ji{3, 1};
  const StateVector a = create_state(basis, ij);
  const StateVector b = create_state(basis, ji);
  CHECK(max_abs(a + b) == 0.0);
  const Dense expected = kron_annihilator(4, 1).adjoint() * kron_annihilator(4, 3).adjoint() *
                         Eigen::VectorXcd::Unit(16, 0);
  CHECK(max_abs(a - expected) == 0.0);
  const std::array<std::size_t, 2> twice{2, 2};
  CHECK(create_state(basis, twice).norm() == 0.0);
}

TEST_CASE("pair superposition at p = (0,0,3), m = 4") {
  const ModeGrid g = ModeGrid::symmetric(Momentum3(0, 0, 3), 4.0);
  const FockBasis basis = build_basis(g);
  const CurrentDecomposition cur = build_current(g);
  const FockOperator h = build_hamiltonian(g);
  const std::array<std::size_t, 2> modes{g.mode_index({0, Pseudospin::down, Species::e}),
                                         g.mode_index({1, Pseudospin::up, Species::f})};
  const StateVector vac = create_state(basis, {});
  const StateVector pair = create_state(basis, modes);
  const StateVector psi = (vac + pair) / std::sqrt(2.0);
  const auto times = linspace_times(5.0, 512);

  SUBCASE("classical velocity is the constant (0, 0, 0.6)") {
    const TimeSeries v = evolve_expectation(psi, cur.classical, h, times);
    for (const Vec3& x : v.values) CHECK(max_abs(x - Vec3(0, 0, 0.6)) < 1e-14);
  }
  SUBCASE("total current matches the dense oracle at every time") {
    const std::array<Dense, 3> oracle = oracle_current(g);
    const TimeSeries total = evolve_expectation(psi, cur.total, h, times);
    for (int k = 0; k < 3; ++k) {
      const cd cross = vac.dot(oracle[k] * pair);
      const double stationary = 0.5 * (vac.dot(oracle[k] * vac) + pair.dot(oracle[k] * pair)).real();
      for (std::size_t i = 0; i < times.size(); ++i) {
        const double expected = stationary + (cross * std::exp(cd(0, -10.0 * times[i]))).real();
        CHECK(std::abs(total.values[i](k) - expected) < 1e-12);
      }
    }
  }
  SUBCASE("z_perp traces the unit circle at frequency 2E = 10") {
    const TimeSeries z = evolve_expectation(psi, cur.z_perp, h, times);
    for (std::size_t i = 0; i < times.size(); ++i) {
      CHECK(std::hypot(z.values[i](0), z.values[i](1)) == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(std::abs(z.values[i](2)) < 1e-14);
      CHECK(z.values[i](0) == doctest::Approx(std::cos(10.0 * times[i])).epsilon(1e-12));
    }
    const OscillationFit fit = fit_oscillation(z.times, z.component(0));
    CHECK(std::abs(fit.frequency - 10.0) < 1e-9);
    CHECK(fit.amplitude == doctest::Approx(1.0).epsilon(1e-9));
  }
  SUBCASE("z_par vanishes for the opposite-spin pair") {
    const TimeSeries z = evolve_expectation(psi, cur.z_par, h, times);
    for (const Vec3& x : z.values) CHECK(x.norm() < 1e-14);
  }
}

TEST_CASE("equal-spin pair oscillates longitudinally with amplitude m/E") {
  const ModeGrid g = ModeGrid::symmetric(Momentum3(0, 0, 3), 4.0);
  const FockBasis basis = build_basis(g);
  const CurrentDecomposition cur = build_current(g);
  const std::array<std::size_t, 2> modes{g.mode_index({0, Pseudospin::up, Species::e}),
                                         g.mode_index({1, Pseudospin::up, Species::f})};
  const StateVector psi = (create_state(basis, {}) + create_state(basis, modes)) / std::sqrt(2.0);
  const auto times = linspace_times(5.0, 512);
  const TimeSeries z = evolve_expectation(psi, cur.z_par, build_hamiltonian(g), times);
  const OscillationFit fit = fit_oscillation(z.times, z.component(2));
  CHECK(fit.amplitude == doctest::Approx(0.8).epsilon(1e-9));
  CHECK(fit.frequency == doctest::Approx(10.0).epsilon(1e-9));
}

TEST_CASE("property: number eigenstates never oscillate") {
  const ModeGrid g = ModeGrid::symmetric(Momentum3(0.4, -1.2, 0.9), 1.7);
  const FockBasis basis = build_basis(g);
  const CurrentDecomposition cur = build_current(g);
  const FockOperator h = build_hamiltonian(g);
  const auto times = linspace_times(3.0, 64);
  Gen gen(43);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<std::size_t> occupied;
    for (std::size_t i = 0; i < g.mode_count(); ++i) {
      if (gen.uniform(0, 1) < 0.5) occupied.push_back(i);
    }
    const StateVector psi = create_state(basis, occupied);
    const TimeSeries total = evolve_expectation(psi, cur.total, h, times);
    for (const Vec3& x : total.values) CHECK(max_abs(x - total.values.front()) < 1e-12);
  }
}

TEST_CASE("property: random states keep their norm and real expectation values") {
  const ModeGrid g = ModeGrid::symmetric(Momentum3(1, 1, 1), 0.5);
  const FockBasis basis = build_basis(g);
  const CurrentDecomposition cur = build_current(g);
  const FockOperator h = build_hamiltonian(g);
  Gen gen(44);
  for (int trial = 0; trial < 10; ++trial) {
    StateVector psi(static_cast<Eigen::Index>(basis.dimension()));
    for (Eigen::Index i = 0; i < psi.size(); ++i) psi(i) = gen.complex_normal();
    psi.normalize();
    const double t = gen.uniform(0, 10);
    CHECK(std::abs(evolve_state(psi, h, t).norm() - 1.0) < 1e-12);
    CHECK_NOTHROW(expectation(evolve_state(psi, h, t), cur.total));
  }
}

TEST_CASE("Hamiltonian is diagonal with sum of occupied energies") {
  const ModeGrid g = ModeGrid::symmetric(Momentum3(0, 0, 3), 4.0);
  const Eigen::VectorXd e = basis_energies(g);
  CHECK(e(0) == 0.0);
  CHECK(e(3) == doctest::Approx(10.0));
  CHECK(e(255) == doctest::Approx(40.0));
  CHECK(max_abs(Dense(build_hamiltonian(g)) - Dense(e.cast<cd>().asDiagonal())) == 0.0);
}

TEST_CASE("two-pair Fock space satisfies the identity at dimension 65536") {
  const ModeGrid g = ModeGrid::symmetric(Momentum3(0, 0, 3), 4.0, Momentum3(1, -2, 0.5));
  CHECK(decomposition_residual(build_current(g)) < 1e-12);
}

TEST_CASE("evolution preconditions") {
  const ModeGrid g = ModeGrid::symmetric(Momentum3(0, 0, 1), 1.0);
  const FockBasis basis = build_basis(g);
  const CurrentDecomposition cur = build_current(g);
  const FockOperator h = build_hamiltonian(g);
  const auto times = linspace_times(1.0, 8);
  const StateVector unnormalized = 2.0 * create_state(basis, {});
  CHECK_THROWS_AS(evolve_expectation(unnormalized, cur.total, h, times), std::invalid_argument);
  CHECK_THROWS_AS(evolve_expectation(StateVector::Zero(4), cur.total, h, times), std::invalid_argument);
  CHECK_THROWS_AS(TimeSeries({0.0, 1.0}, {Vec3::Zero()}), std::invalid_argument);
  CHECK_THROWS_AS(TimeSeries({1.0, 0.0}, {Vec3::Zero(), Vec3::Zero()}), std::invalid_argument);
  CHECK_THROWS(linspace_times(1.0, 1));
}
