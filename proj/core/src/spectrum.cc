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

#include "hushwave/spectrum.h"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <memory>
#include <mutex>
#include <numbers>

#include "hushwave/errors.h"

namespace hushwave {
namespace {

// FFTW's planner is not reentrant; execution with new-array calls is.
std::mutex& PlannerMutex() {
  static std::mutex m;
  return m;
}

struct PlanDeleter {
  void operator()(fftw_plan p) const {
    std::lock_guard<std::mutex> lock(PlannerMutex());
    fftw_destroy_plan(p);
  }
};

template <typename T>
struct FftwFree {
  void operator()(T* p) const { fftw_free(p); }
};

template <typename T>
std::unique_ptr<T[], FftwFree<T>> FftwAlloc(std::size_t n) {
  return std::unique_ptr<T[], FftwFree<T>>(
      static_cast<T*>(fftw_malloc(sizeof(T) * std::max<std::size_t>(n, 1))));
}

}  // namespace

std::vector<std::complex<double>> RealDft(std::span<const double> x) {
  const std::size_t n = x.size();
  if (n == 0) return {};
  const std::size_t m = n / 2 + 1;
  auto in = FftwAlloc<double>(n);
  auto out = FftwAlloc<fftw_complex>(m);
  std::unique_ptr<std::remove_pointer_t<fftw_plan>, PlanDeleter> plan;
  {
    std::lock_guard<std::mutex> lock(PlannerMutex());
    plan.reset(fftw_plan_dft_r2c_1d(static_cast<int>(n), in.get(), out.get(),
                                    FFTW_ESTIMATE));
  }
  std::copy(x.begin(), x.end(), in.get());
  fftw_execute(plan.get());
  std::vector<std::complex<double>> bins(m);
  for (std::size_t k = 0; k < m; ++k) {
    bins[k] = {out[k][0], out[k][1]};
  }
  return bins;
}

std::vector<double> InverseRealDft(std::span<const std::complex<double>> bins,
                                   std::size_t n) {
  if (n == 0) return {};
  const std::size_t m = n / 2 + 1;
  if (bins.size() != m) {
    throw ParameterError("inverse DFT expects n/2+1 bins");
  }
  auto in = FftwAlloc<fftw_complex>(m);
  auto out = FftwAlloc<double>(n);
  std::unique_ptr<std::remove_pointer_t<fftw_plan>, PlanDeleter> plan;
  {
    std::lock_guard<std::mutex> lock(PlannerMutex());
    plan.reset(fftw_plan_dft_c2r_1d(static_cast<int>(n), in.get(), out.get(),
                                    FFTW_ESTIMATE));
  }
  for (std::size_t k = 0; k < m; ++k) {
    in[k][0] = bins[k].real();
    in[k][1] = bins[k].imag();
  }
  fftw_execute(plan.get());
  std::vector<double> x(n);
  const double scale = 1.0 / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = out[i] * scale;
  return x;
}

std::vector<double> HannWindow(std::size_t n) {
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) {
    w[i] = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * static_cast<double>(i) /
                                static_cast<double>(n));
  }
  return w;
}

double Band::center_hz() const { return std::sqrt(lo_hz * hi_hz); }

std::vector<double> BandSpectrum(const Waveform& input,
                                 std::span<const Band> bands,
                                 double full_scale_db) {
  input.Validate();
  if (bands.empty()) throw ParameterError("band list is empty");
  const double nyquist = input.nyquist_hz();
  std::vector<Band> sorted(bands.begin(), bands.end());
  for (const Band& b : sorted) {
    if (!(b.lo_hz > 0.0) || !(b.hi_hz > b.lo_hz) || b.hi_hz > nyquist) {
      throw ParameterError("band edges must satisfy 0 < lo < hi <= Nyquist");
    }
  }
  std::sort(sorted.begin(), sorted.end(),
            [](const Band& a, const Band& b) { return a.lo_hz < b.lo_hz; });
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i].lo_hz < sorted[i - 1].hi_hz) {
      throw ParameterError("bands overlap");
    }
  }

  const std::size_t n = input.size();
  const std::vector<double> window = HannWindow(n);
  std::vector<double> xw(n);
  double window_power = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    xw[i] = input.samples[i] * window[i];
    window_power += window[i] * window[i];
  }
  const auto bins = RealDft(xw);
  const double bin_hz = static_cast<double>(input.sample_rate_hz) / n;
  // Mean-square estimate: sum |X_k|^2 over the two-sided spectrum divided by
  // n * sum(w^2). One-sided bins other than DC and Nyquist count twice.
  const double norm = 1.0 / (static_cast<double>(n) * window_power);

  std::vector<double> levels;
  levels.reserve(bands.size());
  for (const Band& band : bands) {
    double power = 0.0;
    const auto k_lo = static_cast<std::size_t>(std::ceil(band.lo_hz / bin_hz));
    for (std::size_t k = k_lo; k < bins.size(); ++k) {
      const double f = k * bin_hz;
      if (f >= band.hi_hz) break;
      if (f < band.lo_hz) continue;
      const bool edge = (k == 0) || (n % 2 == 0 && k == n / 2);
      power += (edge ? 1.0 : 2.0) * std::norm(bins[k]);
    }
    const double mean_square = power * norm;
    const double rel_db =
        std::max(10.0 * std::log10(2.0 * mean_square), kAnalyzerFloorDbFs);
    levels.push_back(full_scale_db + rel_db);
  }
  return levels;
}

std::vector<Band> ThirdOctaveBands(double lo_hz, double hi_hz) {
  if (!(lo_hz > 0.0) || !(hi_hz >= lo_hz)) {
    throw ParameterError("third-octave range must be positive and ordered");
  }
  std::vector<Band> out;
  const double edge = std::pow(10.0, 1.0 / 20.0);
  const int k_lo = static_cast<int>(std::floor(10.0 * std::log10(lo_hz / 1000.0))) - 1;
  const int k_hi = static_cast<int>(std::ceil(10.0 * std::log10(hi_hz / 1000.0))) + 1;
  for (int k = k_lo; k <= k_hi; ++k) {
    const double center = 1000.0 * std::pow(10.0, k / 10.0);
    if (center < lo_hz * (1.0 - 1e-9) || center > hi_hz * (1.0 + 1e-9)) continue;
    out.push_back({center / edge, center * edge});
  }
  return out;
}

}  // namespace hushwave
