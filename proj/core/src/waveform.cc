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

#include "hushwave/waveform.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hushwave/errors.h"

namespace hushwave {

void Waveform::Validate() const {
  if (sample_rate_hz <= 0) {
    throw ParameterError("sample rate must be positive");
  }
  if (samples.empty()) {
    throw ParameterError("waveform has no samples");
  }
  for (double s : samples) {
    if (!std::isfinite(s)) throw ParameterError("waveform sample is not finite");
  }
}

bool operator==(const Waveform& a, const Waveform& b) {
  return a.sample_rate_hz == b.sample_rate_hz && a.samples == b.samples;
}

Waveform Tone(double frequency_hz, double amplitude, double duration_s,
              int sample_rate_hz, double phase_rad) {
  if (sample_rate_hz <= 0 || duration_s <= 0.0) {
    throw ParameterError("tone needs a positive rate and duration");
  }
  Waveform w;
  w.sample_rate_hz = sample_rate_hz;
  const auto n = static_cast<std::size_t>(std::llround(duration_s * sample_rate_hz));
  w.samples.resize(n);
  const double step = 2.0 * std::numbers::pi * frequency_hz / sample_rate_hz;
  for (std::size_t i = 0; i < n; ++i) {
    w.samples[i] = amplitude * std::sin(step * static_cast<double>(i) + phase_rad);
  }
  return w;
}

double Mean(std::span<const double> x) {
  if (x.empty()) return 0.0;
  double acc = 0.0;
  for (double v : x) acc += v;
  return acc / static_cast<double>(x.size());
}

double MeanSquare(std::span<const double> x) {
  if (x.empty()) return 0.0;
  double acc = 0.0;
  for (double v : x) acc += v * v;
  return acc / static_cast<double>(x.size());
}

double PeakAbs(std::span<const double> x) {
  double peak = 0.0;
  for (double v : x) peak = std::max(peak, std::abs(v));
  return peak;
}

double Correlation(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw ParameterError("correlation inputs differ in length");
  }
  const double ma = Mean(a);
  const double mb = Mean(b);
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double da = a[i] - ma;
    const double db = b[i] - mb;
    sab += da * db;
    saa += da * da;
    sbb += db * db;
  }
  if (saa == 0.0 || sbb == 0.0) return 0.0;
  return sab / std::sqrt(saa * sbb);
}

}  // namespace hushwave
