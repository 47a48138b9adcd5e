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

#include "hushwave/corpus.h"

#include <cmath>
#include <cstdio>

#include "hushwave/errors.h"
#include "hushwave/rng.h"

namespace hushwave {
namespace {

std::string Bssid(int scenario, int device) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "02:%02x:%02x:00:00:%02x", (scenario >> 8) & 0xff,
                scenario & 0xff, device & 0xff);
  return buf;
}

// Integer-ish levels keep the scripted data readable.
double Level(Rng& rng, double lo, double hi) { return std::round(rng.Range(lo, hi)); }

DeviceScript MakeDistractor(DistractorShape shape, Rng& rng, int scenario, int index) {
  DeviceScript d;
  d.bssid = Bssid(scenario, index);
  d.ssid = DistractorShapeName(shape) + "-" + std::to_string(index);
  d.role = DeviceRole::kDistractor;
  d.x_m = Level(rng, 2.0, 30.0);
  d.y_m = Level(rng, -10.0, 10.0);
  switch (shape) {
    case DistractorShape::kSteady:
      d.trajectory = {{0.0, Level(rng, -90.0, -50.0)}};
      break;
    case DistractorShape::kRampBlinker: {
      const double edge = Level(rng, -93.0, -87.0);
      const double step = Level(rng, 5.0, 9.0);
      d.trajectory = {{0.0, edge + 2 * step}, {6.0, edge + step}, {7.0, edge},
                      {8.0, std::nullopt},    {9.0, edge},        {10.0, edge + step},
                      {11.0, edge + 2 * step}};
      break;
    }
    case DistractorShape::kOneShot: {
      const double gone = 6.0 + static_cast<double>(rng.Below(3));
      d.trajectory = {{0.0, Level(rng, -65.0, -45.0)}, {gone, std::nullopt}};
      break;
    }
    case DistractorShape::kLateAppearer: {
      const double at = 9.0 + static_cast<double>(rng.Below(3));
      d.trajectory = {{at, Level(rng, -65.0, -45.0)}};
      break;
    }
    case DistractorShape::kRampAppearer: {
      const double edge = Level(rng, -93.0, -87.0);
      const double step = Level(rng, 5.0, 9.0);
      d.trajectory = {{9.0, edge}, {10.0, edge + step}, {11.0, edge + 2 * step}};
      break;
    }
    case DistractorShape::kRandomToggler: {
      const double level = Level(rng, -70.0, -50.0);
      bool on = rng.Bernoulli(0.5);
      d.trajectory.push_back({0.0, on ? std::optional<double>(level) : std::nullopt});
      for (int t = 1; t <= 11; ++t) {
        if (rng.Bernoulli(0.3)) {
          on = !on;
          d.trajectory.push_back({static_cast<double>(t),
                                  on ? std::optional<double>(level) : std::nullopt});
        }
      }
      break;
    }
  }
  return d;
}

EnvironmentScript CorpusEnvironment(std::uint64_t seed) {
  EnvironmentScript env;
  env.scan_period_s = 1.0;
  env.command_duration_s = 1.0;
  env.duration_s = kCorpusDurationS;
  env.rng_seed = seed;
  return env;
}

DeviceScript MakeVictim(Rng& rng, int scenario, double distance_m) {
  DeviceScript v;
  v.bssid = Bssid(scenario, 0);
  v.ssid = "victim";
  v.role = DeviceRole::kVictim;
  v.x_m = distance_m;
  v.y_m = 0.0;
  v.response_latency_s = 0.5 * static_cast<double>(rng.Below(4));  // 0 .. 1.5 s
  return v;
}

}  // namespace

std::string DistractorShapeName(DistractorShape s) {
  switch (s) {
    case DistractorShape::kSteady:
      return "steady";
    case DistractorShape::kRampBlinker:
      return "ramp-blinker";
    case DistractorShape::kOneShot:
      return "one-shot";
    case DistractorShape::kLateAppearer:
      return "late-appearer";
    case DistractorShape::kRampAppearer:
      return "ramp-appearer";
    case DistractorShape::kRandomToggler:
      return "random-toggler";
  }
  return "unknown";
}

FeedbackParams CorpusFeedbackParams() {
  FeedbackParams p;
  p.window_s = kCorpusWindowS;
  return p;
}

std::vector<CorpusScenario> DeterministicCorpus(std::uint64_t seed, int count) {
  if (count < 1) throw ParameterError("corpus count must be >= 1");
  constexpr DistractorShape kShapes[] = {DistractorShape::kSteady, DistractorShape::kRampBlinker,
                                         DistractorShape::kOneShot, DistractorShape::kLateAppearer,
                                         DistractorShape::kRampAppearer};
  std::vector<CorpusScenario> out;
  for (int i = 0; i < count; ++i) {
    Rng rng(SplitSeed(seed, static_cast<std::uint64_t>(i)));
    CorpusScenario sc;
    sc.env = CorpusEnvironment(SplitSeed(seed, 1000000 + static_cast<std::uint64_t>(i)));
    // Cycle the victim kind so every class is represented.
    const int kind = i % 4;  // 0, 1: responsive; 2: unresponsive; 3: none
    int slots = 6;
    if (kind != 3) {
      DeviceScript v = MakeVictim(rng, i, Level(rng, 1.0, 9.0));
      const double p = kind == 2 ? 0.0 : 1.0;
      for (CommandKind k : kAllCommandKinds) v.delivery_override[k] = p;
      sc.env.devices.push_back(v);
      --slots;
    }
    const int n_distractors = static_cast<int>(rng.Below(static_cast<std::uint64_t>(slots) + 1));
    for (int j = 0; j < n_distractors; ++j) {
      // Every fifth scenario carries a one-shot toggler first.
      const DistractorShape shape =
          (j == 0 && i % 5 == 0) ? DistractorShape::kOneShot : kShapes[rng.Below(5)];
      sc.env.devices.push_back(MakeDistractor(shape, rng, i, j + 1));
    }
    sc.expected_positive = kind < 2;
    sc.name = "det-" + std::to_string(i);
    out.push_back(std::move(sc));
  }
  return out;
}

std::vector<CorpusScenario> NoisyCorpus(std::uint64_t seed, int count, bool random_togglers) {
  if (count < 1) throw ParameterError("corpus count must be >= 1");
  constexpr DistractorShape kShapes[] = {
      DistractorShape::kSteady,       DistractorShape::kRampBlinker,
      DistractorShape::kOneShot,      DistractorShape::kLateAppearer,
      DistractorShape::kRampAppearer, DistractorShape::kRandomToggler};
  std::vector<CorpusScenario> out;
  for (int i = 0; i < count; ++i) {
    Rng rng(SplitSeed(seed, static_cast<std::uint64_t>(i)));
    CorpusScenario sc;
    sc.env = CorpusEnvironment(SplitSeed(seed, 1000000 + static_cast<std::uint64_t>(i)));
    sc.env.rssi_jitter_db = 2.0;
    sc.env.noise_db = 55.0;
    int slots = 6;
    if (rng.Bernoulli(0.8)) {
      sc.env.devices.push_back(MakeVictim(rng, i, std::round(rng.Range(2.0, 10.0) * 10.0) / 10.0));
      --slots;
    }
    const int n_distractors = static_cast<int>(rng.Below(static_cast<std::uint64_t>(slots) + 1));
    for (int j = 0; j < n_distractors; ++j) {
      // Random togglers, when enabled, are rarer than the scripted shapes.
      const std::uint64_t pick = rng.Below(random_togglers ? 11 : 10);
      const DistractorShape shape = pick < 10 ? kShapes[pick / 2] : kShapes[5];
      sc.env.devices.push_back(MakeDistractor(shape, rng, i, j + 1));
    }
    sc.name = (random_togglers ? "stress-" : "noisy-") + std::to_string(i);
    out.push_back(std::move(sc));
  }
  return out;
}

ScenarioResult RunScenario(const CorpusScenario& scenario, const FeedbackParams& params) {
  Environment env(scenario.env, scenario.env.rng_seed);
  double aim = 0.0;
  for (const auto& d : scenario.env.devices) {
    if (d.role == DeviceRole::kVictim) {
      aim = d.bearing_deg();
      break;
    }
  }
  env.Wait(kCorpusStartS);
  env.Aim(aim);
  ScenarioResult r;
  r.name = scenario.name;
  r.outcome = FeedbackRound(env, env, params);
  const auto& o = r.outcome;
  if (o.l2 && o.l3 && o.l4) {
    for (std::size_t i = 0; i < scenario.env.devices.size(); ++i) {
      const auto& d = scenario.env.devices[i];
      if (d.role != DeviceRole::kVictim) continue;
      if (env.HotspotOn(i, o.l2->t) && !env.HotspotOn(i, o.l3->t) && env.HotspotOn(i, o.l4->t)) {
        r.truth_ids.insert(d.bssid);
      }
    }
  }
  r.history = env.History();
  return r;
}

PrecisionRecall FeedbackPrecisionRecall(std::span<const CorpusScenario> corpus,
                                        const FeedbackParams& params) {
  if (corpus.empty()) throw ParameterError("corpus is empty");
  PrecisionRecall pr;
  for (const auto& sc : corpus) {
    ScenarioResult r = RunScenario(sc, params);
    const bool positive = !r.truth_ids.empty();
    const bool flagged = r.outcome.success;
    if (flagged && positive && r.outcome.target_ids == r.truth_ids) {
      ++pr.tp;
    } else if (flagged) {
      ++pr.fp;
      if (positive) ++pr.fn;
    } else if (positive) {
      ++pr.fn;
    } else {
      ++pr.tn;
    }
    pr.results.push_back(std::move(r));
  }
  if (pr.tp + pr.fp > 0) pr.precision = static_cast<double>(pr.tp) / (pr.tp + pr.fp);
  if (pr.tp + pr.fn > 0) pr.recall = static_cast<double>(pr.tp) / (pr.tp + pr.fn);
  return pr;
}

}  // namespace hushwave
