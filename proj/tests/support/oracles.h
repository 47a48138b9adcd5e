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

// Independent reference computations used by the tests. Nothing here calls
// into the library's numerical code.

#ifndef HUSHWAVE_TESTS_SUPPORT_ORACLES_H_
#define HUSHWAVE_TESTS_SUPPORT_ORACLES_H_

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace hushwave::testing {

// Direct O(N) sum: sum_n x[n] exp(-2 pi i k n / N).
std::complex<double> NaiveDftBin(std::span<const double> x, std::size_t k);

// Amplitude of a real sinusoid occupying bin k (k not 0 or N/2).
double NaiveToneAmplitude(std::span<const double> x, std::size_t k);

// 2 J1(x) / x from its power series in long double.
double PistonSeries(double x);

// Smallest positive zero of PistonSeries, by bisection on [3, 4.5].
double PistonFirstNull();

// 3.64 f^-0.8 - 6.5 exp(-0.6 (f - 3.3)^2) + 1e-3 f^4, f in kHz.
double TerhardtDb(double frequency_hz);

// Free-field level change with spherical spreading and linear absorption.
double SpreadingLossDb(double r0_m, double r_m, double alpha_db_per_m);

// Band-limited baseband: sum of `tones` sines at random frequencies in
// [lo_hz, hi_hz] on exact bin centres, scaled to peak `peak`.
std::vector<double> RandomBaseband(std::uint64_t seed, std::size_t n, int sample_rate_hz,
                                   double lo_hz, double hi_hz, int tones, double peak);

// Pearson correlation.
double PearsonCorrelation(std::span<const double> a, std::span<const double> b);

std::string DataPath(const std::string& relative);

}  // namespace hushwave::testing

#endif  // HUSHWAVE_TESTS_SUPPORT_ORACLES_H_
