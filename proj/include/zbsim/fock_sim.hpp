#pragma once

// Truncated fermionic Fock space for the free Dirac field on a finite,
// negation-symmetric set of momenta.
//
// Modes are ordered (momentum index, pseudospin +1/2 before -1/2, e before f);
// mode i occupies bit i of a basis index and ladder operators carry the
// Jordan-Wigner string over the lower bits.  Operators are stored as sparse
// complex matrices; every bilinear touches at most a quarter of the columns.

#include "zbsim/config.hpp"
#include "zbsim/spinor_core.hpp"

#include <Eigen/Sparse>

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace zbsim {

enum class Species { e, f };
enum class LadderKind { create, annihilate };

struct Mode {
  std::size_t momentum = 0;
  Pseudospin s = Pseudospin::up;
  Species species = Species::e;
};

struct GridOptions {
  // Admit p = 0; its triad is taken as the +z axis limit.
  bool allow_zero_momentum = false;
};

class ModeGrid {
 public:
  /// Validates mass, duplicates and closure under p -> -p.
  ModeGrid(std::vector<Momentum3> momenta, double m, GridOptions options = {});

  /// {p, -p}, or {p, -p, q, -q} when a second momentum is given.
  static ModeGrid symmetric(const Momentum3& p, double m,
                            std::optional<Momentum3> q = std::nullopt);

  const std::vector<Momentum3>& momenta() const { return momenta_; }
  double mass() const { return m_; }
  const GridOptions& options() const { return options_; }
  std::size_t momentum_count() const { return momenta_.size(); }
  std::size_t mode_count() const { return 4 * momenta_.size(); }

  std::size_t mode_index(const Mode& mode) const;
  Mode mode_at(std::size_t index) const;
  /// Index of -p for the momentum at index k.
  std::size_t negated(std::size_t k) const { return negated_[k]; }
  std::optional<std::size_t> find(const Momentum3& p) const;
  double energy_at(std::size_t k) const;

 private:
  std::vector<Momentum3> momenta_;
  std::vector<std::size_t> negated_;
  double m_;
  GridOptions options_;
};

class FockBasis {
 public:
  explicit FockBasis(std::size_t mode_count) : modes_(mode_count) {}
  std::size_t mode_count() const { return modes_; }
  std::size_t dimension() const { return std::size_t{1} << modes_; }
  static constexpr std::uint64_t vacuum() { return 0; }

 private:
  std::size_t modes_;
};

using FockOperator = Eigen::SparseMatrix<std::complex<double>>;
using OperatorVec3 = std::array<FockOperator, 3>;
using StateVector = Eigen::VectorXcd;

/// Throws CapacityError above max_modes.
FockBasis build_basis(const ModeGrid& grid, std::size_t max_modes = kMaxFockModes);

FockOperator ladder(const FockBasis& basis, std::size_t mode, LadderKind kind);
FockOperator identity_operator(const FockBasis& basis);

/// {a, b} = ab + ba
FockOperator anticommutator(const FockOperator& a, const FockOperator& b);

/// Largest entry magnitude; 0 for an empty matrix.
double max_abs(const FockOperator& op);
double hermiticity_defect(const FockOperator& op);

struct CurrentDecomposition {
  OperatorVec3 total;
  OperatorVec3 classical;
  OperatorVec3 z_perp;
  OperatorVec3 z_par;
};

/// Builds I from the literal mode expansion of psi^dagger alpha psi at t = 0
/// (products of ladder matrices, including the un-normal-ordered f f^dagger
/// terms), and independently builds
///   v      = sum (p/E)(e^dagger e - f^dagger f)
///   z_perp = sum [transverse(pair_coeff) e^dagger f^dagger + h.c.]
///   z_par  = sum [longitudinal(pair_coeff) e^dagger f^dagger + h.c.].
/// spinor_noise perturbs the spinors entering the brute-force total only.
CurrentDecomposition build_current(const ModeGrid& grid, double spinor_noise = 0.0,
                                   std::uint64_t noise_seed = 0x5eedULL);

/// Max entry of |total - (classical + z_perp + z_par)| over all components.
double decomposition_residual(const CurrentDecomposition& current);

/// sum E(p) (e^dagger e + f^dagger f), diagonal in the occupation basis.
FockOperator build_hamiltonian(const ModeGrid& grid);

/// Energies of all basis states (the diagonal of build_hamiltonian).
Eigen::VectorXd basis_energies(const ModeGrid& grid);

/// Product of creation operators applied to the vacuum, rightmost first:
/// create_state(basis, {i, j}) = c_i^dagger c_j^dagger |0>.
StateVector create_state(const FockBasis& basis, std::span<const std::size_t> modes);

struct TimeSeries {
  std::vector<double> times;
  std::vector<Vec3> values;

  TimeSeries() = default;
  TimeSeries(std::vector<double> t, std::vector<Vec3> v);
  std::vector<double> component(int k) const;
  std::size_t size() const { return times.size(); }
};

/// exp(-iHt)|state> for a diagonal H.
StateVector evolve_state(const StateVector& state, const FockOperator& hamiltonian, double t);

/// <psi(t)| op_k |psi(t)> with |psi(t)> = exp(-iHt)|psi0>.  H must be diagonal.
TimeSeries evolve_expectation(const StateVector& state, const OperatorVec3& op,
                              const FockOperator& hamiltonian, std::span<const double> times,
                              const Tolerances& tol = kDefaultTolerances);

Vec3 expectation(const StateVector& state, const OperatorVec3& op,
                 const Tolerances& tol = kDefaultTolerances);

/// Evenly spaced times t_k = k tmax/(samples-1).
std::vector<double> linspace_times(double tmax, std::size_t samples);

}  // namespace zbsim
