#include "generators.hpp"

#include "zbsim/spectral.hpp"

#include <doctest.h>

#include <cmath>
#include <vector>

using namespace zbsim;
using zbsim::testing::Gen;

namespace {

std::vector<double> uniform_times(double dt, std::size_t n) {
  std::vector<double> t(n);
  for (std::size_t i = 0; i < n; ++i) t[i] = dt * static_cast<double>(i);
  return t;
}

}  // namespace

TEST_CASE("property: pure sinusoids are recovered to near machine precision") {
  Gen gen(51);
  for (int trial = 0; trial < 50; ++trial) {
    const double w = gen.uniform(1.0, 20.0);
    const double a = gen.uniform(0.1, 5.0);
    const double phase = gen.uniform(0, 6.283185307179586);
    const double offset = gen.uniform(-2, 2);
    const std::size_t n = 256 + static_cast<std::size_t>(gen.uniform(0, 512));
    // At least four periods, at least 8 samples per period.
    const double span = 4.0 * 6.283185307179586 / w * gen.uniform(1.0, 4.0);
    const auto t = uniform_times(span / static_cast<double>(n - 1), n);
    if (w * (t[1] - t[0]) > 6.283185307179586 / 8.0) continue;
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) y[i] = offset + a * std::cos(w * t[i] + phase);
    const OscillationFit fit = fit_oscillation(t, y);
    CHECK(std::abs(fit.frequency - w) / w < 1e-9);
    CHECK(std::abs(fit.amplitude - a) / a < 1e-8);
    CHECK(std::abs(fit.offset - offset) < 1e-8);
  }
}

TEST_CASE("linear baseline removes a drift under the oscillation") {
  const auto t = uniform_times(0.01, 2000);
  std::vector<double> y(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) y[i] = 0.3 + 0.7 * t[i] + 0.05 * std::sin(6.0 * t[i]);
  const OscillationFit fit = fit_oscillation(t, y, Baseline::linear);
  CHECK(fit.frequency == doctest::Approx(6.0).epsilon(1e-8));
  CHECK(fit.amplitude == doctest::Approx(0.05).epsilon(1e-6));
  CHECK(fit.drift == doctest::Approx(0.7).epsilon(1e-6));
  const ZbSpectrum zb = zb_spectrum(t, y, 6.0);
  CHECK(zb.dominant_frequency == doctest::Approx(6.0).epsilon(1e-8));
  CHECK(zb.zb_amplitude == doctest::Approx(0.05).epsilon(1e-6));
}

TEST_CASE("constant and linear signals report zero amplitude") {
  const auto t = uniform_times(0.1, 64);
  const std::vector<double> flat(t.size(), 1.25);
  CHECK(fit_oscillation(t, flat).amplitude == 0.0);
  std::vector<double> ramp(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) ramp[i] = 2.0 - 0.5 * t[i];
  CHECK(zb_spectrum(t, ramp).zb_amplitude == 0.0);
}

TEST_CASE("input validation") {
  const auto t = uniform_times(0.1, 31);
  const std::vector<double> y(t.size(), 0.0);
  CHECK_THROWS_AS(fit_oscillation(t, y), std::invalid_argument);
  auto irregular = uniform_times(0.1, 64);
  irregular[10] += 0.03;
  const std::vector<double> z(irregular.size(), 0.0);
  CHECK_THROWS_AS(fit_oscillation(irregular, z), std::invalid_argument);
  const auto short_t = uniform_times(0.01, 64);
  const std::vector<double> s(short_t.size(), 0.0);
  CHECK_THROWS_AS(zb_spectrum(short_t, s, 1.0), std::invalid_argument);
  const std::vector<double> mismatched(10, 0.0);
  CHECK_THROWS_AS(fit_oscillation(t, mismatched), std::invalid_argument);
}
