#include "zbsim/fock_sim.hpp"

#include "zbsim/pair_coeffs.hpp"
#include "zbsim/polarization.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace zbsim {

using cd = std::complex<double>;
using Triplets = std::vector<Eigen::Triplet<cd>>;

ModeGrid::ModeGrid(std::vector<Momentum3> momenta, double m, GridOptions options)
    : momenta_(std::move(momenta)), m_(m), options_(options) {
  if (!(m_ > 0.0)) throw std::invalid_argument("mode grid requires m > 0");
  for (std::size_t i = 0; i < momenta_.size(); ++i) {
    if (momenta_[i].is_zero() && !options_.allow_zero_momentum) {
      throw std::invalid_argument("p = 0 in mode grid requires the axis-convention flag");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (momenta_[i] == momenta_[j]) throw std::invalid_argument("duplicate momentum in mode grid");
    }
  }
  negated_.resize(momenta_.size());
  for (std::size_t i = 0; i < momenta_.size(); ++i) {
    const auto j = find(-momenta_[i]);
    if (!j) throw std::invalid_argument("mode grid is not closed under p -> -p");
    negated_[i] = *j;
  }
}

ModeGrid ModeGrid::symmetric(const Momentum3& p, double m, std::optional<Momentum3> q) {
  std::vector<Momentum3> momenta{p, -p};
  if (q) {
    momenta.push_back(*q);
    momenta.push_back(-*q);
  }
  return ModeGrid(std::move(momenta), m);
}

std::optional<std::size_t> ModeGrid::find(const Momentum3& p) const {
  for (std::size_t i = 0; i < momenta_.size(); ++i) {
    if (momenta_[i] == p) return i;
  }
  return std::nullopt;
}

std::size_t ModeGrid::mode_index(const Mode& mode) const {
  if (mode.momentum >= momenta_.size()) throw std::out_of_range("mode momentum index out of range");
  return 4 * mode.momentum + 2 * static_cast<std::size_t>(index(mode.s)) +
         (mode.species == Species::e ? 0 : 1);
}

Mode ModeGrid::mode_at(std::size_t i) const {
  if (i >= mode_count()) throw std::out_of_range("mode index out of range");
  return {i / 4, (i % 4) / 2 == 0 ? Pseudospin::up : Pseudospin::down,
          i % 2 == 0 ? Species::e : Species::f};
}

double ModeGrid::energy_at(std::size_t k) const { return energy(momenta_.at(k), m_); }

FockBasis build_basis(const ModeGrid& grid, std::size_t max_modes) {
  if (grid.mode_count() > max_modes) {
    throw CapacityError("Fock space with " + std::to_string(grid.mode_count()) +
                        " modes exceeds the capacity of " + std::to_string(max_modes) + " modes");
  }
  return FockBasis(grid.mode_count());
}

FockOperator ladder(const FockBasis& basis, std::size_t mode, LadderKind kind) {
  if (mode >= basis.mode_count()) throw std::out_of_range("unknown mode " + std::to_string(mode));
  const std::uint64_t bit = std::uint64_t{1} << mode;
  const std::uint64_t lower = bit - 1;
  const auto dim = static_cast<Eigen::Index>(basis.dimension());
  Triplets t;
  t.reserve(basis.dimension() / 2);
  for (std::uint64_t n = 0; n < basis.dimension(); ++n) {
    if (!(n & bit)) continue;
    const double sign = (std::popcount(n & lower) % 2 == 0) ? 1.0 : -1.0;
    const auto occupied = static_cast<Eigen::Index>(n);
    const auto empty = static_cast<Eigen::Index>(n ^ bit);
    if (kind == LadderKind::annihilate) {
      t.emplace_back(empty, occupied, sign);
    } else {
      t.emplace_back(occupied, empty, sign);
    }
  }
  FockOperator op(dim, dim);
  op.setFromTriplets(t.begin(), t.end());
  return op;
}

FockOperator identity_operator(const FockBasis& basis) {
  const auto dim = static_cast<Eigen::Index>(basis.dimension());
  FockOperator id(dim, dim);
  id.setIdentity();
  return id;
}

FockOperator anticommutator(const FockOperator& a, const FockOperator& b) {
  return FockOperator(a * b) + FockOperator(b * a);
}

double max_abs(const FockOperator& op) {
  double best = 0.0;
  for (Eigen::Index k = 0; k < op.outerSize(); ++k) {
    for (FockOperator::InnerIterator it(op, k); it; ++it) best = std::max(best, std::abs(it.value()));
  }
  return best;
}

double hermiticity_defect(const FockOperator& op) {
  return max_abs(FockOperator(op - FockOperator(op.adjoint())));
}

namespace {

class LadderCache {
 public:
  LadderCache(const ModeGrid& grid, const FockBasis& basis) : grid_(grid) {
    create_.reserve(basis.mode_count());
    annihilate_.reserve(basis.mode_count());
    for (std::size_t i = 0; i < basis.mode_count(); ++i) {
      create_.push_back(ladder(basis, i, LadderKind::create));
      annihilate_.push_back(ladder(basis, i, LadderKind::annihilate));
    }
  }

  const FockOperator& create(std::size_t k, Pseudospin s, Species sp) const {
    return create_[grid_.mode_index({k, s, sp})];
  }
  const FockOperator& annihilate(std::size_t k, Pseudospin s, Species sp) const {
    return annihilate_[grid_.mode_index({k, s, sp})];
  }

 private:
  const ModeGrid& grid_;
  std::vector<FockOperator> create_;
  std::vector<FockOperator> annihilate_;
};

// Adds coef_c * op to component c of the accumulated vector operator.
void accumulate(std::array<Triplets, 3>& acc, const FockOperator& op, const CVec3& coef) {
  for (Eigen::Index k = 0; k < op.outerSize(); ++k) {
    for (FockOperator::InnerIterator it(op, k); it; ++it) {
      for (int c = 0; c < 3; ++c) {
        if (coef(c) != cd(0)) acc[c].emplace_back(it.row(), it.col(), coef(c) * it.value());
      }
    }
  }
}

OperatorVec3 assemble(std::array<Triplets, 3>& acc, Eigen::Index dim) {
  OperatorVec3 out;
  for (int c = 0; c < 3; ++c) {
    out[c].resize(dim, dim);
    out[c].setFromTriplets(acc[c].begin(), acc[c].end());
    out[c].makeCompressed();
  }
  return out;
}

PolarizationTriad triad_for(const ModeGrid& grid, const Momentum3& p) {
  if (p.is_zero() && grid.options().allow_zero_momentum) return make_triad(Momentum3(0, 0, 1));
  return make_triad(p);
}

}  // namespace

CurrentDecomposition build_current(const ModeGrid& grid, double spinor_noise,
                                   std::uint64_t noise_seed) {
  const FockBasis basis = build_basis(grid);
  const auto dim = static_cast<Eigen::Index>(basis.dimension());
  const LadderCache ops(grid, basis);
  const double m = grid.mass();
  std::mt19937_64 rng(noise_seed);

  const std::size_t n = grid.momentum_count();
  // Noisy or exact plane-wave spinors per (momentum, pseudospin).
  std::vector<std::array<Bispinor, 2>> u(n), v(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (Pseudospin s : kPseudospins) {
      u[k][index(s)] = perturbed(make_u(grid.momenta()[k], s, m), spinor_noise, rng);
      v[k][index(s)] = perturbed(make_v(grid.momenta()[k], s, m), spinor_noise, rng);
    }
  }

  // psi^dagger alpha psi integrated over the box; plane-wave orthogonality
  // keeps q = p for e^dagger e, f f^dagger and q = -p for e^dagger f^dagger, f e.
  std::array<Triplets, 3> total;
  for (std::size_t kp = 0; kp < n; ++kp) {
    for (std::size_t kq = 0; kq < n; ++kq) {
      const bool same = kq == kp;
      const bool opposite = kq == grid.negated(kp);
      if (!same && !opposite) continue;
      const double weight = m / std::sqrt(grid.energy_at(kp) * grid.energy_at(kq));
      for (Pseudospin s : kPseudospins) {
        for (Pseudospin r : kPseudospins) {
          const Bispinor& up = u[kp][index(s)];
          const Bispinor& vp = v[kp][index(s)];
          const Bispinor& uq = u[kq][index(r)];
          const Bispinor& vq = v[kq][index(r)];
          if (same) {
            accumulate(total,
                       FockOperator(ops.create(kp, s, Species::e) * ops.annihilate(kq, r, Species::e)),
                       weight * alpha_bilinear(up, uq));
            accumulate(total,
                       FockOperator(ops.annihilate(kp, s, Species::f) * ops.create(kq, r, Species::f)),
                       weight * alpha_bilinear(vp, vq));
          }
          if (opposite) {
            accumulate(total,
                       FockOperator(ops.create(kp, s, Species::e) * ops.create(kq, r, Species::f)),
                       weight * alpha_bilinear(up, vq));
            accumulate(total,
                       FockOperator(ops.annihilate(kp, s, Species::f) * ops.annihilate(kq, r, Species::e)),
                       weight * alpha_bilinear(vp, uq));
          }
        }
      }
    }
  }

  std::array<Triplets, 3> classical, z_perp, z_par;
  for (std::size_t k = 0; k < n; ++k) {
    const Momentum3& p = grid.momenta()[k];
    const CVec3 velocity = (p.vec() / grid.energy_at(k)).cast<cd>();
    const PolarizationTriad triad = triad_for(grid, p);
    for (Pseudospin s : kPseudospins) {
      accumulate(classical,
                 FockOperator(ops.create(k, s, Species::e) * ops.annihilate(k, s, Species::e)),
                 velocity);
      accumulate(classical,
                 FockOperator(ops.create(k, s, Species::f) * ops.annihilate(k, s, Species::f)),
                 -velocity);
      for (Pseudospin r : kPseudospins) {
        const TriadComponents c = project_on_triad(pair_coeff(p, s, r, m), triad);
        const CVec3 perp = transverse_part(c, triad);
        const CVec3 par = longitudinal_part(c, triad);
        const FockOperator pair =
            ops.create(k, s, Species::e) * ops.create(grid.negated(k), r, Species::f);
        const FockOperator pair_dagger = pair.adjoint();
        accumulate(z_perp, pair, perp);
        accumulate(z_perp, pair_dagger, perp.conjugate());
        accumulate(z_par, pair, par);
        accumulate(z_par, pair_dagger, par.conjugate());
      }
    }
  }

  return {assemble(total, dim), assemble(classical, dim), assemble(z_perp, dim),
          assemble(z_par, dim)};
}

double decomposition_residual(const CurrentDecomposition& current) {
  double worst = 0.0;
  for (int c = 0; c < 3; ++c) {
    const FockOperator diff = current.total[c] - current.classical[c] - current.z_perp[c] -
                              current.z_par[c];
    worst = std::max(worst, max_abs(diff));
  }
  return worst;
}

Eigen::VectorXd basis_energies(const ModeGrid& grid) {
  const FockBasis basis = build_basis(grid);
  std::vector<double> mode_energy(grid.mode_count());
  for (std::size_t i = 0; i < grid.mode_count(); ++i) {
    mode_energy[i] = grid.energy_at(grid.mode_at(i).momentum);
  }
  Eigen::VectorXd out(static_cast<Eigen::Index>(basis.dimension()));
  for (std::uint64_t n = 0; n < basis.dimension(); ++n) {
    double e = 0.0;
    for (std::size_t i = 0; i < grid.mode_count(); ++i) {
      if (n & (std::uint64_t{1} << i)) e += mode_energy[i];
    }
    out(static_cast<Eigen::Index>(n)) = e;
  }
  return out;
}

FockOperator build_hamiltonian(const ModeGrid& grid) {
  const Eigen::VectorXd diag = basis_energies(grid);
  const Eigen::Index dim = diag.size();
  FockOperator h(dim, dim);
  Triplets t;
  t.reserve(static_cast<std::size_t>(dim));
  for (Eigen::Index i = 0; i < dim; ++i) {
    if (diag(i) != 0.0) t.emplace_back(i, i, diag(i));
  }
  h.setFromTriplets(t.begin(), t.end());
  return h;
}

StateVector create_state(const FockBasis& basis, std::span<const std::size_t> modes) {
  StateVector state = StateVector::Zero(static_cast<Eigen::Index>(basis.dimension()));
  state(0) = 1.0;
  for (auto it = modes.rbegin(); it != modes.rend(); ++it) {
    state = ladder(basis, *it, LadderKind::create) * state;
  }
  return state;
}

TimeSeries::TimeSeries(std::vector<double> t, std::vector<Vec3> v)
    : times(std::move(t)), values(std::move(v)) {
  if (times.size() != values.size()) throw std::invalid_argument("time series length mismatch");
  for (std::size_t i = 1; i < times.size(); ++i) {
    if (!(times[i] > times[i - 1])) throw std::invalid_argument("time series times must increase");
  }
}

std::vector<double> TimeSeries::component(int k) const {
  std::vector<double> out;
  out.reserve(values.size());
  for (const Vec3& v : values) out.push_back(v(k));
  return out;
}

namespace {

Eigen::VectorXd diagonal_of(const FockOperator& h) {
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(h.rows());
  for (Eigen::Index k = 0; k < h.outerSize(); ++k) {
    for (FockOperator::InnerIterator it(h, k); it; ++it) {
      if (it.row() != it.col()) {
        if (it.value() != cd(0)) throw std::invalid_argument("Hamiltonian must be diagonal");
        continue;
      }
      if (it.value().imag() != 0.0) throw std::invalid_argument("Hamiltonian must be Hermitian");
      diag(it.row()) = it.value().real();
    }
  }
  return diag;
}

StateVector apply_phases(const StateVector& state, const Eigen::VectorXd& energies, double t) {
  StateVector out(state.size());
  for (Eigen::Index i = 0; i < state.size(); ++i) out(i) = std::polar(1.0, -energies(i) * t) * state(i);
  return out;
}

}  // namespace

StateVector evolve_state(const StateVector& state, const FockOperator& hamiltonian, double t) {
  if (state.size() != hamiltonian.rows()) throw std::invalid_argument("state/Hamiltonian dimension mismatch");
  return apply_phases(state, diagonal_of(hamiltonian), t);
}

Vec3 expectation(const StateVector& state, const OperatorVec3& op, const Tolerances& tol) {
  Vec3 out;
  for (int c = 0; c < 3; ++c) {
    if (op[c].rows() != state.size() || op[c].cols() != state.size()) {
      throw std::invalid_argument("operator/state dimension mismatch");
    }
    const cd value = state.dot(op[c] * state);
    if (std::abs(value.imag()) > tol.imaginary * std::max(1.0, std::abs(value.real()))) {
      throw std::runtime_error("expectation value has an imaginary part; operator not Hermitian");
    }
    out(c) = value.real();
  }
  return out;
}

TimeSeries evolve_expectation(const StateVector& state, const OperatorVec3& op,
                              const FockOperator& hamiltonian, std::span<const double> times,
                              const Tolerances& tol) {
  if (state.size() != hamiltonian.rows()) throw std::invalid_argument("state/Hamiltonian dimension mismatch");
  if (std::abs(state.norm() - 1.0) > tol.normalization) throw std::invalid_argument("state is not normalized");
  const Eigen::VectorXd energies = diagonal_of(hamiltonian);
  std::vector<Vec3> values;
  values.reserve(times.size());
  for (double t : times) values.push_back(expectation(apply_phases(state, energies, t), op, tol));
  return TimeSeries(std::vector<double>(times.begin(), times.end()), std::move(values));
}

std::vector<double> linspace_times(double tmax, std::size_t samples) {
  if (samples < 2 || !(tmax > 0.0)) throw std::invalid_argument("need tmax > 0 and at least 2 samples");
  std::vector<double> t(samples);
  for (std::size_t i = 0; i < samples; ++i) t[i] = tmax * static_cast<double>(i) / static_cast<double>(samples - 1);
  return t;
}

}  // namespace zbsim
