#pragma once

// Frequency estimation for uniformly sampled real signals.
//
// A baseline (constant, or constant + linear drift) is removed, the dominant
// bin of a zero-padded FFT is located and refined by quadratic interpolation,
// and the estimate is then polished by maximizing the least-squares energy
// of baseline + a cos(wt) + b sin(wt) over a one-bin bracket.

#include <span>

namespace zbsim {

struct OscillationFit {
  double frequency = 0.0;  // angular frequency
  double amplitude = 0.0;  // sqrt(a^2 + b^2)
  double offset = 0.0;     // baseline value at t = 0
  double drift = 0.0;      // baseline slope (0 unless detrended)
};

enum class Baseline { constant, linear };

/// Requires at least 32 uniformly spaced samples.
OscillationFit fit_oscillation(std::span<const double> times, std::span<const double> values,
                               Baseline baseline = Baseline::constant);

struct ZbSpectrum {
  double dominant_frequency = 0.0;
  double zb_amplitude = 0.0;
};

/// Linear drift removed first.  When an expected frequency is given the
/// series must cover at least two of its periods.
ZbSpectrum zb_spectrum(std::span<const double> times, std::span<const double> values,
                       double expected_frequency = 0.0);

}  // namespace zbsim
