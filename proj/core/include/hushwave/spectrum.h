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

#ifndef HUSHWAVE_SPECTRUM_H_
#define HUSHWAVE_SPECTRUM_H_

#include <complex>
#include <span>
#include <vector>

#include "hushwave/waveform.h"

namespace hushwave {

// Unnormalized real DFT, bins 0..n/2. Backed by FFTW with estimate-mode
// plans, so results are reproducible run to run.
std::vector<std::complex<double>> RealDft(std::span<const double> x);

// Inverse of RealDft including the 1/n factor.
std::vector<double> InverseRealDft(std::span<const std::complex<double>> bins,
                                   std::size_t n);

// Periodic Hann window of length n.
std::vector<double> HannWindow(std::size_t n);

struct Band {
  double lo_hz = 0.0;
  double hi_hz = 0.0;

  double center_hz() const;  // geometric mean of the edges
};

// Levels below this (relative to full scale) are reported as the floor.
inline constexpr double kAnalyzerFloorDbFs = -300.0;

// Per-band level in dB, where `full_scale_db` is the level assigned to a
// full-scale sine (mean square 1/2).
//
// The analyzer applies a periodic Hann window to the whole buffer and takes
// one DFT. Band power is the window-power-normalized sum of one-sided bin
// powers whose bin frequency lies in [lo, hi). A band with no power reads
// full_scale_db + kAnalyzerFloorDbFs.
std::vector<double> BandSpectrum(const Waveform& input,
                                 std::span<const Band> bands,
                                 double full_scale_db);

// Base-ten third-octave bands with exact centers 1000 * 10^(k/10) Hz whose
// centers fall inside [lo_hz, hi_hz]. Band edges are center * 10^(-/+1/20).
// For 100..4000 Hz this yields the 17 bands centered 100 .. 3981 Hz.
std::vector<Band> ThirdOctaveBands(double lo_hz, double hi_hz);

}  // namespace hushwave

#endif  // HUSHWAVE_SPECTRUM_H_
