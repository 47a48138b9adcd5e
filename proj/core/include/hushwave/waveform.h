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

#ifndef HUSHWAVE_WAVEFORM_H_
#define HUSHWAVE_WAVEFORM_H_

#include <cstddef>
#include <span>
#include <vector>

namespace hushwave {

inline constexpr int kDefaultSampleRateHz = 192000;

// Uniformly sampled real signal. Nominal full scale is +/-1.
struct Waveform {
  int sample_rate_hz = kDefaultSampleRateHz;
  std::vector<double> samples;

  std::size_t size() const { return samples.size(); }
  double duration_s() const {
    return static_cast<double>(samples.size()) / sample_rate_hz;
  }
  double nyquist_hz() const { return 0.5 * sample_rate_hz; }

  // Throws ParameterError unless the rate is positive, the buffer is
  // non-empty and every sample is finite.
  void Validate() const;
};

bool operator==(const Waveform& a, const Waveform& b);

// Sample index n maps to time n / sample_rate_hz.
Waveform Tone(double frequency_hz, double amplitude, double duration_s,
              int sample_rate_hz = kDefaultSampleRateHz, double phase_rad = 0.0);

double Mean(std::span<const double> x);
double MeanSquare(std::span<const double> x);
double PeakAbs(std::span<const double> x);

// Pearson correlation. Returns 0 when either input has zero variance.
double Correlation(std::span<const double> a, std::span<const double> b);

}  // namespace hushwave

#endif  // HUSHWAVE_WAVEFORM_H_
