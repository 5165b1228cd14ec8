#include "zbsim/dirac1d.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace zbsim {

using cd = std::complex<double>;

double Packet1D::norm() const { return std::sqrt(amplitudes.squaredNorm() * grid.dp); }

Eigen::Matrix2cd h1d(double p, double m, double c) {
  if (!(m >= 0.0)) throw std::invalid_argument("mass must be non-negative");
  Eigen::Matrix2cd h;
  h << m * c * c, c * p, c * p, -m * c * c;
  return h;
}

double energy1d(double p, const PacketParams& params) {
  return std::hypot(params.c * p, params.m * params.c * params.c);
}

Eigen::Vector2d branch_vector(double p, const PacketParams& params, int branch) {
  const double theta = std::atan2(params.c * p, params.m * params.c * params.c);
  const double ch = std::cos(0.5 * theta);
  const double sh = std::sin(0.5 * theta);
  return branch == 0 ? Eigen::Vector2d(ch, sh) : Eigen::Vector2d(-sh, ch);
}

namespace {

void validate_params(const PacketParams& params) {
  if (!(params.m >= 0.0) || !(params.c > 0.0) || !(params.hbar > 0.0)) {
    throw std::invalid_argument("packet parameters need m >= 0, c > 0, hbar > 0");
  }
}

void validate_grid(const MomentumGrid& grid) {
  if (grid.n < 16 || !std::has_single_bit(grid.n)) {
    throw std::invalid_argument("momentum grid size must be a power of two (>= 16)");
  }
  if (!(grid.dp > 0.0)) throw std::invalid_argument("momentum grid spacing must be positive");
}

std::span<const double> stencil(int order) {
  static constexpr std::array<double, 1> o2{1.0 / 2.0};
  static constexpr std::array<double, 2> o4{2.0 / 3.0, -1.0 / 12.0};
  static constexpr std::array<double, 3> o6{3.0 / 4.0, -3.0 / 20.0, 1.0 / 60.0};
  static constexpr std::array<double, 4> o8{4.0 / 5.0, -1.0 / 5.0, 4.0 / 105.0, -1.0 / 280.0};
  switch (order) {
    case 2: return o2;
    case 4: return o4;
    case 6: return o6;
    case 8: return o8;
    default: throw std::invalid_argument("finite-difference order must be 2, 4, 6 or 8");
  }
}

}  // namespace

Packet1D init_packet(double p0, double sigma_p, cd w_plus, cd w_minus,
                     const PacketParams& params, const GridSpec& spec, const Tolerances& tol) {
  validate_params(params);
  if (!(sigma_p > 0.0)) throw std::invalid_argument("sigma_p must be positive");
  if (std::abs(std::norm(w_plus) + std::norm(w_minus) - 1.0) > tol.normalization) {
    throw std::invalid_argument("branch weights must satisfy |w+|^2 + |w-|^2 = 1");
  }

  Packet1D packet;
  packet.params = params;
  packet.grid.n = spec.n;
  packet.grid.center = spec.center_on_p0 ? p0 : 0.0;
  packet.grid.dp = spec.dp > 0.0 ? spec.dp : 20.0 * sigma_p / static_cast<double>(spec.n - 1);
  validate_grid(packet.grid);

  // |psi|^2 is a normal density of width sigma_p; mass beyond the grid ends.
  const double s = sigma_p * std::sqrt(2.0);
  const double outside = 0.5 * std::erfc((p0 - packet.grid.min()) / s) +
                         0.5 * std::erfc((packet.grid.max() - p0) / s);
  if (!(outside < tol.tail_mass)) {
    throw std::invalid_argument("momentum grid too narrow for the Gaussian envelope");
  }

  packet.amplitudes.resize(static_cast<Eigen::Index>(packet.grid.n), 2);
  for (std::size_t j = 0; j < packet.grid.n; ++j) {
    const double p = packet.grid.at(j);
    const double g = std::exp(-(p - p0) * (p - p0) / (4.0 * sigma_p * sigma_p));
    const Eigen::Vector2cd spinor = w_plus * branch_vector(p, params, 0).cast<cd>() +
                                    w_minus * branch_vector(p, params, 1).cast<cd>();
    packet.amplitudes.row(static_cast<Eigen::Index>(j)) = g * spinor.transpose();
  }
  packet.amplitudes /= packet.norm();
  return packet;
}

Eigen::Vector2d branch_populations(const Packet1D& packet) {
  Eigen::Vector2d pop = Eigen::Vector2d::Zero();
  for (std::size_t j = 0; j < packet.grid.n; ++j) {
    const Eigen::Vector2cd psi = packet.amplitudes.row(static_cast<Eigen::Index>(j)).transpose();
    for (int b = 0; b < 2; ++b) {
      pop(b) += std::norm(branch_vector(packet.grid.at(j), packet.params, b).cast<cd>().dot(psi));
    }
  }
  return pop * packet.grid.dp;
}

Packet1D evolve_packet(const Packet1D& packet, double t) {
  const PacketParams& pp = packet.params;
  Packet1D out = packet;
  for (std::size_t j = 0; j < packet.grid.n; ++j) {
    const double p = packet.grid.at(j);
    const double e = energy1d(p, pp);
    if (e == 0.0) continue;
    const double phase = e * t / pp.hbar;
    const Eigen::Matrix2cd u = std::cos(phase) * Eigen::Matrix2cd::Identity() -
                               cd(0, std::sin(phase) / e) * h1d(p, pp.m, pp.c);
    const auto row = static_cast<Eigen::Index>(j);
    out.amplitudes.row(row) = (u * packet.amplitudes.row(row).transpose()).transpose();
  }
  return out;
}

Packet1D translate(const Packet1D& packet, double x0) {
  Packet1D out = packet;
  for (std::size_t j = 0; j < packet.grid.n; ++j) {
    out.amplitudes.row(static_cast<Eigen::Index>(j)) *=
        std::polar(1.0, -packet.grid.at(j) * x0 / packet.params.hbar);
  }
  return out;
}

double mean_position(const Packet1D& packet, const PositionOptions& options) {
  const auto coeffs = stencil(options.fd_order);
  const auto n = static_cast<Eigen::Index>(packet.grid.n);
  const Eigen::MatrixX2cd& a = packet.amplitudes;
  cd acc = 0.0;
  for (Eigen::Index j = 0; j < n; ++j) {
    Eigen::RowVector2cd d = Eigen::RowVector2cd::Zero();
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      const auto step = static_cast<Eigen::Index>(k + 1);
      if (j + step < n) d += coeffs[k] * a.row(j + step);
      if (j - step >= 0) d -= coeffs[k] * a.row(j - step);
    }
    acc += (a.row(j).conjugate() * d.transpose())(0);
  }
  // i hbar D, with D scaled by 1/dp and the sum by dp.
  return (cd(0, packet.params.hbar) * acc).real();
}

double analytic_mean_position(const Packet1D& packet, double t, const PositionOptions& options) {
  const PacketParams& pp = packet.params;
  Eigen::Matrix2cd sigma_x;
  sigma_x << 0, 1, 1, 0;
  const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();

  cd acc = 0.0;
  for (std::size_t j = 0; j < packet.grid.n; ++j) {
    const double p = packet.grid.at(j);
    const double e = energy1d(p, pp);
    if (e == 0.0) throw std::invalid_argument("Heisenberg oracle undefined where E(p) = 0");
    const Eigen::Matrix2cd h = h1d(p, pp.m, pp.c);
    const Eigen::Matrix2cd h_inv = h / (e * e);
    const double phase = 2.0 * e * t / pp.hbar;
    const Eigen::Matrix2cd u2 = std::cos(phase) * id - cd(0, std::sin(phase) / e) * h;
    const Eigen::Matrix2cd v = (pp.c * pp.c * p * t) * h_inv +
                               cd(0, 0.5 * pp.hbar * pp.c) * (sigma_x - pp.c * p * h_inv) * h_inv * (u2 - id);
    const Eigen::Vector2cd psi = packet.amplitudes.row(static_cast<Eigen::Index>(j)).transpose();
    acc += psi.dot(v * psi);
  }
  return mean_position(packet, options) + acc.real() * packet.grid.dp;
}

PacketSeries packet_series(const Packet1D& packet, std::span<const double> times,
                           const PositionOptions& options) {
  PacketSeries s;
  s.times.assign(times.begin(), times.end());
  for (double t : times) {
    s.numeric.push_back(mean_position(evolve_packet(packet, t), options));
    s.oracle.push_back(analytic_mean_position(packet, t, options));
  }
  return s;
}

}  // namespace zbsim
