#pragma once

// 1+1D Dirac wave packets in momentum space.
//
// H(p) = c p sigma_x + m c^2 sigma_z (alpha -> sigma_x, beta -> sigma_z).
// Evolution is exact per grid point; position is x = i hbar d/dp.

#include "zbsim/config.hpp"

#include <Eigen/Dense>

#include <complex>
#include <span>
#include <vector>

namespace zbsim {

struct PacketParams {
  double c = 1.0;
  double m = 1.0;
  double hbar = 1.0;
};

/// p_j = center + (j - (n-1)/2) dp, symmetric about center.
struct MomentumGrid {
  std::size_t n = 4096;
  double dp = 0.0;
  double center = 0.0;

  double at(std::size_t j) const {
    return center + (static_cast<double>(j) - 0.5 * static_cast<double>(n - 1)) * dp;
  }
  double min() const { return at(0); }
  double max() const { return at(n - 1); }
};

struct Packet1D {
  MomentumGrid grid;
  PacketParams params;
  Eigen::MatrixX2cd amplitudes;  // rows: grid points; cols: upper, lower

  double norm() const;
};

Eigen::Matrix2cd h1d(double p, double m, double c);
double energy1d(double p, const PacketParams& params);

/// Positive (branch 0) and negative (branch 1) energy eigenvectors of H(p),
/// smooth in p: (cos t/2, sin t/2) and (-sin t/2, cos t/2), tan t = p/(m c).
Eigen::Vector2d branch_vector(double p, const PacketParams& params, int branch);

struct GridSpec {
  std::size_t n = 4096;
  double dp = 0.0;          // 0: span +-10 sigma_p over the grid
  bool center_on_p0 = true; // otherwise centered at p = 0
};

/// Gaussian envelope exp(-(p-p0)^2 / 4 sigma_p^2) split over the two energy
/// branches with weights (w_plus, w_minus), normalized to sum |psi|^2 dp = 1.
Packet1D init_packet(double p0, double sigma_p, std::complex<double> w_plus,
                     std::complex<double> w_minus, const PacketParams& params,
                     const GridSpec& spec = {}, const Tolerances& tol = kDefaultTolerances);

/// Populations of the positive and negative energy branches.
Eigen::Vector2d branch_populations(const Packet1D& packet);

Packet1D evolve_packet(const Packet1D& packet, double t);

/// Multiplies every amplitude by exp(-i p x0 / hbar), translating by +x0.
Packet1D translate(const Packet1D& packet, double x0);

struct PositionOptions {
  int fd_order = 8;  // centered stencil order: 2, 4, 6 or 8
};

/// <x> = sum_j psi_j^dagger (i hbar D psi)_j dp, D a centered finite
/// difference with zero amplitude outside the grid.
double mean_position(const Packet1D& packet, const PositionOptions& options = {});

/// Heisenberg-picture oracle:
///   x(t) = x(0) + c^2 p H^-1 t + (i hbar c / 2)(sigma_x - c p H^-1) H^-1 (exp(-2iHt/hbar) - 1)
/// evaluated pointwise in p and integrated over the initial packet.
double analytic_mean_position(const Packet1D& packet, double t,
                              const PositionOptions& options = {});

struct PacketSeries {
  std::vector<double> times;
  std::vector<double> numeric;
  std::vector<double> oracle;
};

PacketSeries packet_series(const Packet1D& packet, std::span<const double> times,
                           const PositionOptions& options = {});

}  // namespace zbsim
