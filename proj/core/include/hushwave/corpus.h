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

// Short scripted scenarios for measuring how well a single feedback round
// separates a responding victim from background hotspots.
//
// Every scenario runs one round starting at t = 2 s with a 2 s window and
// 1 s commands, so L1..L4 are read at t = 2, 5, 8 and 11 and the whole
// scenario spans ticks 0..11.

#ifndef HUSHWAVE_CORPUS_H_
#define HUSHWAVE_CORPUS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hushwave/feedback.h"
#include "hushwave/sim.h"

namespace hushwave {

inline constexpr double kCorpusStartS = 2.0;
inline constexpr double kCorpusWindowS = 2.0;
inline constexpr double kCorpusDurationS = 11.0;

enum class DistractorShape {
  kSteady,          // present throughout
  kRampBlinker,     // ramps out before L3 and back in before L4
  kOneShot,         // abrupt, present at L2 and gone from L3 on
  kLateAppearer,    // abrupt appearance between L3 and L4
  kRampAppearer,    // gradual appearance between L3 and L4
  kRandomToggler,   // abrupt on/off at random ticks (stress corpus only)
};

std::string DistractorShapeName(DistractorShape s);

struct CorpusScenario {
  std::string name;
  EnvironmentScript env;
  // By construction; checked against the simulated truth in tests.
  std::optional<bool> expected_positive;
};

// Deterministic corpus: delivery forced to 0 or 1, no RSSI jitter, only
// steady, ramping, one-shot and late-appearing distractors.
std::vector<CorpusScenario> DeterministicCorpus(std::uint64_t seed, int count);

// Noisy corpus: victims at 2..10 m with modeled delivery, 2 dB RSSI jitter
// and the scripted distractor shapes. With `random_togglers`, about one
// distractor in eleven flips abruptly at random ticks; such a device can
// match the on/off/on pattern exactly and is then indistinguishable from a
// victim within one round.
std::vector<CorpusScenario> NoisyCorpus(std::uint64_t seed, int count,
                                        bool random_togglers = false);

FeedbackParams CorpusFeedbackParams();

struct ScenarioResult {
  std::string name;
  FeedbackOutcome outcome;
  IdSet truth_ids;  // victims on at L2, off at L3, on at L4
  std::vector<ScanSnapshot> history;
};

// Runs one round on a fresh environment seeded with env.rng_seed.
ScenarioResult RunScenario(const CorpusScenario& scenario, const FeedbackParams& params);

struct PrecisionRecall {
  int tp = 0, fp = 0, fn = 0, tn = 0;
  std::optional<double> precision;  // none when nothing was flagged
  std::optional<double> recall;     // none when no scenario was positive
  std::vector<ScenarioResult> results;
};

// A flagged round counts as a true positive only if its target set equals
// the true responder set.
PrecisionRecall FeedbackPrecisionRecall(std::span<const CorpusScenario> corpus,
                                        const FeedbackParams& params);

}  // namespace hushwave

#endif  // HUSHWAVE_CORPUS_H_
