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

// Ultrasonic AM transmit chain and the square-law receive model.
//
// A baseband command v[n] rides on a carrier as
//
//   s[n] = (1 + depth * v[n]) * cos(2 pi fc n / fs)
//
// and a microphone with a weak quadratic term maps its input x to
// a1 * x + a2 * x^2. After low-pass filtering the quadratic term leaves
// (a2 / 2) * (1 + 2 v + v^2) in the audible band, which is how an inaudible
// carrier delivers an audible command.

#ifndef HUSHWAVE_SIGNALS_H_
#define HUSHWAVE_SIGNALS_H_

#include <cstdint>

#include "hushwave/waveform.h"

namespace hushwave {

inline constexpr double kDefaultCarrierHz = 40200.0;

struct NonlinearCoeffs {
  double a1 = 1.0;  // linear gain
  double a2 = 0.1;  // quadratic coefficient, >= 0

  void Validate() const;
};

// Throws ParameterError when the carrier is at or above Nyquist, depth is
// outside (0, 1] or any baseband sample exceeds +/-1.
Waveform Modulate(const Waveform& baseband, double carrier_hz = kDefaultCarrierHz,
                  double depth = 1.0);

// Pointwise a1 * x + a2 * x^2.
Waveform MicNonlinear(const Waveform& input, const NonlinearCoeffs& coeffs);

// Zero-phase low-pass. The filter is applied in the frequency domain over
// the whole buffer: unit gain up to `cutoff_hz`, a raised-cosine roll-off to
// zero at 1.5 * cutoff_hz, and zero above. The buffer is treated as one
// period, so content that completes whole cycles in the buffer is filtered
// exactly; other content sees a wrap-around edge at the buffer ends.
Waveform Lowpass(const Waveform& input, double cutoff_hz);

struct Recovered {
  Waveform audio;
  bool degenerate = false;  // input was all zeros
};

// MicNonlinear, then Lowpass, then mean removal over the full buffer.
// The result approximates (a2 / 2) * (2 v + v^2) minus its mean.
Recovered RecoverBaseband(const Waveform& passband, const NonlinearCoeffs& coeffs,
                          double cutoff_hz);

// Adds zero-mean Gaussian background noise at `snr_db` below the input's
// mean-square power.
Waveform AddBackgroundNoise(const Waveform& input, double snr_db, std::uint64_t seed);

}  // namespace hushwave

#endif  // HUSHWAVE_SIGNALS_H_
