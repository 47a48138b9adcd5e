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

// Acceptance checks. Prints one PASS or FAIL line per criterion and exits
// non-zero if any fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.h"
#include "hushwave/acoustics.h"
#include "hushwave/attack.h"
#include "hushwave/corpus.h"
#include "hushwave/field.h"
#include "hushwave/layouts.h"
#include "hushwave/signals.h"
#include "hushwave/sim.h"
#include "hushwave/spectrum.h"
#include "hushwave/text.h"
#include "support/oracles.h"
#include "support/reference_feedback.h"

namespace hushwave {
namespace {

namespace fs = std::filesystem;

struct Verdict {
  bool pass = false;
  std::string detail;
};

std::string Fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), f, v);
  return buf;
}

constexpr int kFs = 192000;
constexpr std::size_t kN = 19200;

// 1. Demodulation round trip and constant-input square law.
Verdict SignalChain() {
  double worst_corr = 1.0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto base = testing::RandomBaseband(seed, kN, kFs, 100.0, 4000.0, 6, 0.5);
    const Recovered r = RecoverBaseband(Modulate(Waveform{kFs, base}, 40200.0, 1.0), {}, 8000.0);
    worst_corr = std::min(worst_corr, testing::PearsonCorrelation(r.audio.samples, base));
  }
  double worst_err = 0.0;
  const NonlinearCoeffs c{1.0, 0.1};
  for (double v : {-0.5, -0.25, 0.0, 0.1, 0.5}) {
    const Waveform s = Modulate(Waveform{kFs, std::vector<double>(kN, v)}, 40200.0, 1.0);
    const Waveform y = Lowpass(MicNonlinear(s, c), 8000.0);
    const double expect = 0.5 * c.a2 * (1.0 + v) * (1.0 + v);
    for (double x : y.samples) worst_err = std::max(worst_err, std::abs(x - expect));
  }
  return {worst_corr >= 0.99 && worst_err <= 1e-9,
          "min correlation " + Fmt("%.6f", worst_corr) + " over 20 basebands, constant-input max error " +
              Fmt("%.3g", worst_err)};
}

// 2. A bare carrier leaves nothing audible.
Verdict CarrierSilence() {
  const Waveform s = Modulate(Waveform{kFs, std::vector<double>(kN, 0.0)}, 40200.0, 1.0);
  const Recovered r = RecoverBaseband(s, {}, 8000.0);
  // Energy per band summed over the audible range, relative to a full-scale
  // sine (mean square 1/2).
  double ms = 0.0;
  for (std::size_t k = 1; k < kN / 2; ++k) {
    const double f = static_cast<double>(k) * kFs / kN;
    if (f < 20.0 || f > 20000.0) continue;
    const double a = testing::NaiveToneAmplitude(r.audio.samples, k);
    ms += 0.5 * a * a;
  }
  const double db = ms > 0.0 ? 10.0 * std::log10(ms / 0.5) : -400.0;
  return {db <= -80.0, "audible-band energy " + Fmt("%.1f", db) + " dB re full scale"};
}

// 3. Leakage check on single tones, and failure once attenuation is halved.
Verdict Leakage() {
  const auto profile = DefaultInsertionLossProfile();
  const auto halved = profile.ScaledAttenuation(0.5);
  int fails_default = 0, fails_halved = 0, tones = 0;
  double worst = 1e9;
  for (const Band& b : ThirdOctaveBands(100.0, 4000.0)) {
    const Waveform t = Tone(b.center_hz(), 1.0, 1.0, kFs);
    const LeakageReport r = MakeLeakageReport(t, profile, 60.0, kAllDirections);
    worst = std::min(worst, r.worst_margin_db);
    fails_default += !r.pass;
    fails_halved += !MakeLeakageReport(t, halved, 60.0, kAllDirections).pass;
    ++tones;
  }
  return {fails_default == 0 && fails_halved >= 1,
          std::to_string(tones) + " tones, worst margin " + Fmt("%.2f", worst) +
              " dB; halved attenuation fails " + std::to_string(fails_halved)};
}

// 4. Front carrier-band gain.
Verdict FrontGain() {
  const auto p = DefaultInsertionLossProfile();
  bool ok = true;
  for (double f = p.carrier_band.lo_hz; f <= p.carrier_band.hi_hz; f += 100.0) {
    ok = ok && p.GainDb(Direction::kFront, f) == 11.0;
  }
  return {ok, "gain at 40200 Hz " + Fmt("%.17g", p.GainDb(Direction::kFront, 40200.0)) + " dB"};
}

// 5. Piston pattern against the power series, and its first null.
Verdict Piston() {
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double x = 16.0 * i / 999.0;
    worst = std::max(worst, std::abs(PistonPattern(x) - testing::PistonSeries(x)));
  }
  double lo = 3.0, hi = 4.5;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (PistonPattern(mid) > 0.0 ? lo : hi) = mid;
  }
  return {worst <= 1e-9 && std::abs(lo - 3.8317) <= 1e-4,
          "max error " + Fmt("%.3g", worst) + ", first null " + Fmt("%.6f", lo)};
}

struct CliOut {
  int code;
  std::string out, err;
};

CliOut Cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code =
      cli::Dispatch(args, out, err, [](const std::string&) { return std::optional<std::string>(); });
  return {code, out.str(), err.str()};
}

// 6. Sweep table selection through the command-line tool.
Verdict Sweep() {
  const std::vector<std::string> args = {"sweep", "--table",
                                         testing::DataPath("enhancement_sweep.csv")};
  const CliOut a = Cli(args), b = Cli(args);
  const std::string want = "12 speakers, 18 mm, 40200 Hz, 142 dB\n";
  std::string got = a.out;
  if (!got.empty() && got.back() == '\n') got.pop_back();
  return {a.code == 0 && a.out == want && b.out == a.out, "selected \"" + got + "\""};
}

// 7. Layout ranking under the shipped mask.
Verdict Layouts() {
  const auto layouts = ShippedLayouts();
  const auto s = RankLayouts(layouts, 40200.0, 0.018, ObstructionMask{});
  std::string order;
  for (const auto& x : s) order += (order.empty() ? "" : " < ") + x.name + Fmt(" (%.3f)", x.planarity_rad);
  return {s.front().name == "2x6", order};
}

// 8. Feedback round against the exhaustive reference, and precision/recall.
Verdict Feedback() {
  const FeedbackParams params = CorpusFeedbackParams();
  const auto det = DeterministicCorpus(2026, 120);
  const auto noisy = NoisyCorpus(2026, 120);
  int scenarios = 0, agree = 0;
  const auto compare = [&](const std::vector<CorpusScenario>& corpus) {
    for (const auto& sc : corpus) {
      const ScenarioResult r = RunScenario(sc, params);
      const auto& o = r.outcome;
      ++scenarios;
      if (o.aborted) continue;
      const std::array<double, 4> times = {o.l1->t, o.l2->t, o.l3->t, o.l4 ? o.l4->t : 0.0};
      const auto ref = testing::ReferenceFeedback(r.history, times, params.filter);
      agree += ref.success == o.success && ref.targets == o.target_ids &&
               ref.decided_early == !o.l4.has_value();
    }
  };
  compare(det);
  compare(noisy);
  const auto pd = FeedbackPrecisionRecall(det, params);
  const auto pn = FeedbackPrecisionRecall(noisy, params);
  const auto val = [](const std::optional<double>& v) { return v.value_or(-1.0); };
  const bool ok = agree == scenarios && scenarios >= 100 && val(pd.precision) == 1.0 &&
                  val(pd.recall) == 1.0 && val(pn.precision) >= 0.95 && val(pn.recall) >= 0.95;
  return {ok, std::to_string(agree) + "/" + std::to_string(scenarios) +
                  " agree; deterministic P " + Fmt("%.3f", val(pd.precision)) + " R " +
                  Fmt("%.3f", val(pd.recall)) + "; noisy P " + Fmt("%.3f", val(pn.precision)) +
                  " R " + Fmt("%.3f", val(pn.recall))};
}

// Not gated: corpus with random abrupt togglers.
std::string StressInfo() {
  const auto pr = FeedbackPrecisionRecall(NoisyCorpus(2026, 120, true), CorpusFeedbackParams());
  return "stress corpus with random togglers: P " + Fmt("%.3f", pr.precision.value_or(-1.0)) +
         " R " + Fmt("%.3f", pr.recall.value_or(-1.0));
}

// 9. Repeated-send aggregation against Monte-Carlo.
Verdict Repeats() {
  std::mt19937_64 gen(20260101);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  constexpr int kDraws = 1000000;
  double worst_z = 0.0;
  for (double p : {0.1, 0.5, 0.76}) {
    for (int n : {1, 5}) {
      int hits = 0;
      for (int d = 0; d < kDraws; ++d) {
        bool any = false;
        for (int k = 0; k < n; ++k) any = (u(gen) < p) || any;
        hits += any;
      }
      const double q = RepeatedSuccessProbability(p, n);
      const double sigma = std::sqrt(q * (1.0 - q) / kDraws);
      worst_z = std::max(worst_z, std::abs(static_cast<double>(hits) / kDraws - q) / sigma);
    }
  }
  const double v = RepeatedSuccessProbability(0.76, 5);
  return {worst_z <= 3.0 && std::abs(v - 0.999204) <= 1e-6,
          "worst deviation " + Fmt("%.2f", worst_z) + " sigma; (0.76, 5) = " + Fmt("%.7f", v)};
}

// 10. Range and full-chain calibration.
Verdict Calibration() {
  std::vector<double> grid;
  for (int i = 0; i <= 14; ++i) grid.push_back(5.0 + 0.5 * i);
  const auto rsa_at = [&](double noise) {
    const auto r = EstimateRsa(SingleVictimEnvironment(8.85, 0.0, noise), grid, 200, 1);
    return r.rsa_m.value_or(0.0);
  };
  const double r55 = rsa_at(55.0), r70 = rsa_at(70.0), r75 = rsa_at(75.0);

  // Every stage executes with 0.98; the rate is averaged over batches of 50
  // rounds.
  EnvironmentScript env = SingleVictimEnvironment(8.85, 60.0, 55.0);
  for (CommandKind k : kAllCommandKinds) env.delivery_override[k] = 0.98;
  constexpr int kBatches = 200;
  double sum = 0.0;
  for (int b = 0; b < kBatches; ++b) {
    sum += ChainSuccessRate(env, AttackConfig{}, 50, SplitSeed(77, static_cast<std::uint64_t>(b)));
  }
  const double chain = sum / kBatches;
  const bool ok = std::abs(r55 - 8.85) <= 0.5 && r70 >= 7.0 && r70 <= 8.0 && r75 >= 7.0 &&
                  r75 <= 8.0 && std::abs(chain - 0.94) <= 0.03;
  return {ok, "range " + Fmt("%.1f", r55) + " m at 55 dB, " + Fmt("%.1f", r70) + " m at 70 dB, " +
                  Fmt("%.1f", r75) + " m at 75 dB; chain success " + Fmt("%.3f", chain) +
                  " (mean of 200 x 50 rounds)"};
}

// 11. Same seed, same bytes.
Verdict Determinism() {
  const fs::path dir = fs::temp_directory_path() / "hushwave_acceptance";
  fs::create_directories(dir);
  const auto run = [&](const std::string& tag) {
    const std::string ev = (dir / ("events_" + tag + ".jsonl")).string();
    const CliOut r = Cli({"attack-sim", "--seed", "7", "--events", ev});
    return std::pair{r.code, r.out + ReadTextFile(ev)};
  };
  const auto a = run("a");
  const auto b = run("b");
  fs::remove_all(dir);
  return {a.first == 0 && b.first == 0 && !a.second.empty() && a.second == b.second,
          std::to_string(a.second.size()) + " bytes of report and events, identical: " +
              (a.second == b.second ? "yes" : "no")};
}

}  // namespace
}  // namespace hushwave

int main() {
  using namespace hushwave;
  const std::vector<std::pair<std::string, std::function<Verdict()>>> checks = {
      {"demodulation round trip", SignalChain},
      {"carrier-only silence", CarrierSilence},
      {"leakage threshold", Leakage},
      {"front carrier-band gain", FrontGain},
      {"piston directivity", Piston},
      {"parameter sweep", Sweep},
      {"layout ranking", Layouts},
      {"feedback equivalence and accuracy", Feedback},
      {"repeat aggregation", Repeats},
      {"range and chain calibration", Calibration},
      {"attack-sim determinism", Determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    Verdict v;
    try {
      v = checks[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failed += !v.pass;
    std::printf("%s %zu: %s: %s\n", v.pass ? "PASS" : "FAIL", i + 1, checks[i].first.c_str(),
                v.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("INFO: %s\n", StressInfo().c_str());
  std::printf("%d of %zu criteria passed\n", static_cast<int>(checks.size()) - failed,
              checks.size());
  return failed == 0 ? 0 : 1;
}
