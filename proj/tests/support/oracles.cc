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

#include "support/oracles.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace hushwave::testing {

std::complex<double> NaiveDftBin(std::span<const double> x, std::size_t k) {
  const auto n = x.size();
  long double re = 0.0L, im = 0.0L;
  for (std::size_t i = 0; i < n; ++i) {
    // Reduce k*i mod n exactly before forming the angle.
    const auto m = static_cast<long double>((k * i) % n);
    const long double a = -2.0L * std::numbers::pi_v<long double> * m / n;
    re += x[i] * std::cos(a);
    im += x[i] * std::sin(a);
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

double NaiveToneAmplitude(std::span<const double> x, std::size_t k) {
  return 2.0 * std::abs(NaiveDftBin(x, k)) / static_cast<double>(x.size());
}

double PistonSeries(double x) {
  // sum_m (-1)^m (x/2)^(2m) / (m! (m+1)!)
  const long double h2 = static_cast<long double>(x) * x / 4.0L;
  long double term = 1.0L;
  long double sum = 1.0L;
  for (int m = 1; m < 200; ++m) {
    term *= -h2 / (static_cast<long double>(m) * (m + 1));
    sum += term;
    if (std::fabs(term) < 1e-30L) break;
  }
  return static_cast<double>(sum);
}

double PistonFirstNull() {
  double lo = 3.0, hi = 4.5;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (PistonSeries(mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double TerhardtDb(double frequency_hz) {
  const double f = frequency_hz / 1000.0;
  return 3.64 * std::pow(f, -0.8) - 6.5 * std::exp(-0.6 * (f - 3.3) * (f - 3.3)) +
         1e-3 * std::pow(f, 4.0);
}

double SpreadingLossDb(double r0_m, double r_m, double alpha_db_per_m) {
  return 20.0 * std::log10(r_m / r0_m) + alpha_db_per_m * (r_m - r0_m);
}

std::vector<double> RandomBaseband(std::uint64_t seed, std::size_t n, int sample_rate_hz,
                                   double lo_hz, double hi_hz, int tones, double peak) {
  std::mt19937_64 gen(seed);
  const double df = static_cast<double>(sample_rate_hz) / static_cast<double>(n);
  const auto kmin = static_cast<long>(std::ceil(lo_hz / df));
  const auto kmax = static_cast<long>(std::floor(hi_hz / df));
  std::uniform_int_distribution<long> pick(kmin, kmax);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> amp(0.3, 1.0);
  std::vector<double> x(n, 0.0);
  for (int t = 0; t < tones; ++t) {
    const long k = pick(gen);
    const double ph = phase(gen);
    const double a = amp(gen);
    for (std::size_t i = 0; i < n; ++i) {
      const double ang = 2.0 * std::numbers::pi * static_cast<double>((k * static_cast<long>(i)) %
                                                                     static_cast<long>(n)) /
                         static_cast<double>(n);
      x[i] += a * std::sin(ang + ph);
    }
  }
  double m = 0.0;
  for (double v : x) m = std::max(m, std::abs(v));
  if (m > 0.0) {
    for (double& v : x) v *= peak / m;
  }
  return x;
}

double PearsonCorrelation(std::span<const double> a, std::span<const double> b) {
  long double ma = 0, mb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ma += a[i];
    mb += b[i];
  }
  ma /= a.size();
  mb /= b.size();
  long double sab = 0, saa = 0, sbb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sab += (a[i] - ma) * (b[i] - mb);
    saa += (a[i] - ma) * (a[i] - ma);
    sbb += (b[i] - mb) * (b[i] - mb);
  }
  return static_cast<double>(sab / std::sqrt(saa * sbb));
}

std::string DataPath(const std::string& relative) {
  return std::string(HUSHWAVE_DATA_DIR) + "/" + relative;
}

}  // namespace hushwave::testing
