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

#include <benchmark/benchmark.h>

#include "hushwave/signals.h"
#include "hushwave/waveform.h"

namespace hushwave {
namespace {

void BM_RecoverBaseband(benchmark::State& state) {
  const double seconds = static_cast<double>(state.range(0)) / 10.0;
  const Waveform am = Modulate(Tone(1000.0, 0.5, seconds, 192000), 40200.0, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(RecoverBaseband(am, {}, 8000.0));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(am.size()));
}
BENCHMARK(BM_RecoverBaseband)->Arg(1)->Arg(10);

}  // namespace
}  // namespace hushwave

BENCHMARK_MAIN();
