#include "zbsim/spectral.hpp"

#include <Eigen/Dense>
#include <unsupported/Eigen/FFT>

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace zbsim {

namespace {

constexpr std::size_t kMinSamples = 32;

struct Fit {
  Eigen::VectorXd coeffs;  // baseline terms, then cos, sin
  double sse = 0.0;
};

Eigen::MatrixXd design(std::span<const double> t, Baseline baseline, const double* omega) {
  const auto n = static_cast<Eigen::Index>(t.size());
  const Eigen::Index nb = baseline == Baseline::linear ? 2 : 1;
  Eigen::MatrixXd a(n, nb + (omega ? 2 : 0));
  for (Eigen::Index i = 0; i < n; ++i) {
    a(i, 0) = 1.0;
    if (nb == 2) a(i, 1) = t[i];
    if (omega) {
      a(i, nb) = std::cos(*omega * t[i]);
      a(i, nb + 1) = std::sin(*omega * t[i]);
    }
  }
  return a;
}

Fit least_squares(const Eigen::MatrixXd& a, const Eigen::VectorXd& y) {
  Fit f;
  f.coeffs = a.colPivHouseholderQr().solve(y);
  f.sse = (y - a * f.coeffs).squaredNorm();
  return f;
}

void validate(std::span<const double> t, std::span<const double> y) {
  if (t.size() != y.size()) throw std::invalid_argument("times and values differ in length");
  if (t.size() < kMinSamples) throw std::invalid_argument("too few samples for a frequency fit (need 32)");
  const double dt = (t.back() - t.front()) / static_cast<double>(t.size() - 1);
  if (!(dt > 0.0)) throw std::invalid_argument("times must increase");
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (std::abs(t[i] - (t.front() + dt * static_cast<double>(i))) > 1e-6 * dt) {
      throw std::invalid_argument("frequency fit requires uniform sampling");
    }
  }
}

// Dominant nonzero frequency of r from a zero-padded FFT with parabolic
// interpolation of the peak magnitude.
double coarse_peak(const Eigen::VectorXd& r, double dt, double& bin_width) {
  std::size_t padded = 1;
  while (padded < 8 * static_cast<std::size_t>(r.size())) padded <<= 1;
  std::vector<double> x(padded, 0.0);
  for (Eigen::Index i = 0; i < r.size(); ++i) x[static_cast<std::size_t>(i)] = r(i);
  std::vector<std::complex<double>> spectrum;
  Eigen::FFT<double> fft;
  fft.fwd(spectrum, x);

  std::size_t best = 1;
  for (std::size_t k = 1; k < padded / 2; ++k) {
    if (std::abs(spectrum[k]) > std::abs(spectrum[best])) best = k;
  }
  double shift = 0.0;
  if (best > 1 && best + 1 < padded / 2) {
    const double a = std::abs(spectrum[best - 1]);
    const double b = std::abs(spectrum[best]);
    const double c = std::abs(spectrum[best + 1]);
    const double denom = a - 2.0 * b + c;
    if (denom != 0.0) shift = 0.5 * (a - c) / denom;
  }
  bin_width = 2.0 * std::numbers::pi / (static_cast<double>(padded) * dt);
  return (static_cast<double>(best) + shift) * bin_width;
}

}  // namespace

OscillationFit fit_oscillation(std::span<const double> times, std::span<const double> values,
                               Baseline baseline) {
  validate(times, values);
  const auto n = static_cast<Eigen::Index>(values.size());
  const Eigen::VectorXd y = Eigen::Map<const Eigen::VectorXd>(values.data(), n);
  const Fit base = least_squares(design(times, baseline, nullptr), y);
  const Eigen::VectorXd r = y - design(times, baseline, nullptr) * base.coeffs;

  OscillationFit out;
  out.offset = base.coeffs(0);
  out.drift = baseline == Baseline::linear ? base.coeffs(1) : 0.0;

  const double scale = std::max(1.0, y.cwiseAbs().maxCoeff());
  if (std::sqrt(r.squaredNorm() / static_cast<double>(n)) <= 1e-15 * scale) return out;

  const double dt = (times.back() - times.front()) / static_cast<double>(n - 1);
  double bin = 0.0;
  const double guess = coarse_peak(r, dt, bin);

  auto sse = [&](double w) { return least_squares(design(times, baseline, &w), y).sse; };

  // Golden-section search on the residual over one padded bin either side.
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = std::max(guess - bin, 0.25 * bin);
  double hi = guess + bin;
  double x1 = hi - invphi * (hi - lo);
  double x2 = lo + invphi * (hi - lo);
  double f1 = sse(x1);
  double f2 = sse(x2);
  for (int iter = 0; iter < 200 && (hi - lo) > 1e-14 * hi; ++iter) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - invphi * (hi - lo);
      f1 = sse(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + invphi * (hi - lo);
      f2 = sse(x2);
    }
  }
  const double omega = 0.5 * (lo + hi);
  const Fit full = least_squares(design(times, baseline, &omega), y);
  const Eigen::Index nb = baseline == Baseline::linear ? 2 : 1;
  out.frequency = omega;
  out.amplitude = std::hypot(full.coeffs(nb), full.coeffs(nb + 1));
  out.offset = full.coeffs(0);
  out.drift = baseline == Baseline::linear ? full.coeffs(1) : 0.0;
  return out;
}

ZbSpectrum zb_spectrum(std::span<const double> times, std::span<const double> values,
                       double expected_frequency) {
  if (expected_frequency > 0.0 && times.size() >= 2 &&
      (times.back() - times.front()) * expected_frequency < 2.0 * 2.0 * std::numbers::pi) {
    throw std::invalid_argument("series too short: fewer than two oscillation periods sampled");
  }
  const OscillationFit fit = fit_oscillation(times, values, Baseline::linear);
  return {fit.frequency, fit.amplitude};
}

}  // namespace zbsim
