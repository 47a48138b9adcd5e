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

#ifndef HUSHWAVE_RNG_H_
#define HUSHWAVE_RNG_H_

#include <cstdint>
#include <random>

namespace hushwave {

// Derives the seed of stream `index` from a master seed:
//   SplitMix64(master + 0x9E3779B97F4A7C15 * (index + 1)).
// Monte-Carlo trial i always uses SplitSeed(master, i), independent of how
// many trials run or in which order.
std::uint64_t SplitSeed(std::uint64_t master, std::uint64_t index);

// mt19937_64 with distribution code kept here rather than in <random>, so
// draws are identical across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [0, 1) with 53 random bits.
  double Uniform();
  // Standard normal via Box-Muller; caches the second variate.
  double Gaussian();
  bool Bernoulli(double p) { return Uniform() < p; }
  // Uniform on [lo, hi).
  double Range(double lo, double hi) { return lo + (hi - lo) * Uniform(); }
  // Uniform integer on [0, n).
  std::uint64_t Below(std::uint64_t n);

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace hushwave

#endif  // HUSHWAVE_RNG_H_
