// Copyright 2026 The Hushwave Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hushwave/signals.h"

#include <cmath>
#include <numbers>

#include "hushwave/errors.h"
#include "hushwave/rng.h"
#include "hushwave/spectrum.h"

namespace hushwave {

void NonlinearCoeffs::Validate() const {
  if (!std::isfinite(a1) || !std::isfinite(a2)) {
    throw ParameterError("nonlinear coefficients must be finite");
  }
  if (a2 < 0.0) throw ParameterError("a2 must be non-negative");
}

Waveform Modulate(const Waveform& baseband, double carrier_hz, double depth) {
  baseband.Validate();
  if (!(carrier_hz > 0.0) || carrier_hz >= baseband.nyquist_hz()) {
    throw ParameterError("carrier must lie in (0, Nyquist)");
  }
  if (!(depth > 0.0) || depth > 1.0) {
    throw ParameterError("modulation depth must lie in (0, 1]");
  }
  if (PeakAbs(baseband.samples) > 1.0) {
    throw ParameterError("baseband exceeds +/-1 full scale");
  }
  Waveform out;
  out.sample_rate_hz = baseband.sample_rate_hz;
  out.samples.resize(baseband.size());
  const auto fs = static_cast<std::uint64_t>(baseband.sample_rate_hz);
  const bool integral = carrier_hz == std::floor(carrier_hz);
  const auto fc = static_cast<std::uint64_t>(carrier_hz);
  const double step = 2.0 * std::numbers::pi * carrier_hz / baseband.sample_rate_hz;
  for (std::size_t n = 0; n < baseband.size(); ++n) {
    // With an integral carrier the phase index fc*n is reduced exactly
    // modulo fs, so long buffers keep full precision.
    const double phase =
        integral ? 2.0 * std::numbers::pi * static_cast<double>((fc * n) % fs) / fs
                 : step * static_cast<double>(n);
    out.samples[n] = (1.0 + depth * baseband.samples[n]) * std::cos(phase);
  }
  return out;
}

Waveform MicNonlinear(const Waveform& input, const NonlinearCoeffs& coeffs) {
  input.Validate();
  coeffs.Validate();
  Waveform out;
  out.sample_rate_hz = input.sample_rate_hz;
  out.samples.resize(input.size());
  for (std::size_t n = 0; n < input.size(); ++n) {
    const double x = input.samples[n];
    out.samples[n] = coeffs.a1 * x + coeffs.a2 * x * x;
  }
  return out;
}

Waveform Lowpass(const Waveform& input, double cutoff_hz) {
  input.Validate();
  if (!(cutoff_hz > 0.0) || cutoff_hz >= input.nyquist_hz()) {
    throw ParameterError("cutoff must lie in (0, Nyquist)");
  }
  const std::size_t n = input.size();
  auto bins = RealDft(input.samples);
  const double bin_hz = static_cast<double>(input.sample_rate_hz) / n;
  const double stop_hz = 1.5 * cutoff_hz;
  for (std::size_t k = 0; k < bins.size(); ++k) {
    const double f = k * bin_hz;
    if (f <= cutoff_hz) continue;
    if (f >= stop_hz) {
      bins[k] = 0.0;
      continue;
    }
    const double c = std::cos(0.5 * std::numbers::pi * (f - cutoff_hz) /
                              (stop_hz - cutoff_hz));
    bins[k] *= c * c;
  }
  Waveform out;
  out.sample_rate_hz = input.sample_rate_hz;
  out.samples = InverseRealDft(bins, n);
  return out;
}

Recovered RecoverBaseband(const Waveform& passband, const NonlinearCoeffs& coeffs,
                          double cutoff_hz) {
  passband.Validate();
  Recovered result;
  if (PeakAbs(passband.samples) == 0.0) {
    result.audio.sample_rate_hz = passband.sample_rate_hz;
    result.audio.samples.assign(passband.size(), 0.0);
    result.degenerate = true;
    return result;
  }
  result.audio = Lowpass(MicNonlinear(passband, coeffs), cutoff_hz);
  const double dc = Mean(result.audio.samples);
  for (double& s : result.audio.samples) s -= dc;
  return result;
}

Waveform AddBackgroundNoise(const Waveform& input, double snr_db, std::uint64_t seed) {
  input.Validate();
  const double sigma = std::sqrt(MeanSquare(input.samples) * std::pow(10.0, -snr_db / 10.0));
  Rng rng(seed);
  Waveform out = input;
  for (double& s : out.samples) s += sigma * rng.Gaussian();
  return out;
}

}  // namespace hushwave
