#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zbsim {

// Numerical thresholds shared by the library, the verify suites and the CLI.
struct Tolerances {
  double identity = 1e-12;       // exact algebraic identities (spinors, triad, unitarity)
  double car = 1e-14;            // anticommutators and Hermiticity of ladder algebra
  double coefficient = 1e-10;    // closed-form current coefficients vs brute force
  double operator_identity = 1e-12;
  double normalization = 1e-9;   // accepted drift of a user-supplied state norm
  double imaginary = 1e-12;      // imaginary part of Hermitian expectation values
  double no_oscillation = 1e-10; // amplitude counted as "no zitterbewegung"
  double oracle = 1e-8;          // wave packet numerics vs Heisenberg oracle
  double packet_norm = 1e-10;
  double tail_mass = 1e-12;      // Gaussian mass allowed outside a momentum grid
};

inline constexpr Tolerances kDefaultTolerances{};

// Fock space guard. Two +-p pairs (16 modes) is the largest supported grid.
inline constexpr std::size_t kMaxFockModes = 16;

class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace zbsim
