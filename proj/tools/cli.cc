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

#include "cli.h"

#include <cmath>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>

#include "CLI11.hpp"
#include "hushwave/acoustics.h"
#include "hushwave/errors.h"
#include "hushwave/feedback.h"
#include "hushwave/field.h"
#include "hushwave/json_io.h"
#include "hushwave/layouts.h"
#include "hushwave/signals.h"
#include "hushwave/sim.h"
#include "hushwave/text.h"
#include "hushwave/wav.h"
#include "json.hpp"

namespace hushwave::cli {
namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

// Options every subcommand accepts.
struct Common {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> sets;
};

struct Context {
  RunConfig config;
  std::ostream& out;
  std::ostream& err;
};

RunConfig BuildConfig(const Common& c, const EnvLookup& env) {
  RunConfig config;
  if (!c.config_path.empty()) {
    std::string text;
    try {
      text = ReadTextFile(c.config_path);
    } catch (const IoError& e) {
      throw ParameterError(std::string("config: ") + e.what());
    }
    try {
      config = ParseRunConfig(text);
    } catch (const ParameterError& e) {
      throw ParameterError(c.config_path + ": " + e.what());
    }
  }
  config = ApplyEnvOverrides(config, env);
  for (const auto& s : c.sets) {
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw ParameterError("--set expects group.key=value, got '" + s + "'");
    SetConfigValue(config, s.substr(0, eq), s.substr(eq + 1));
  }
  if (c.seed) config.global.seed = *c.seed;
  config.Validate();
  return config;
}

fs::path OutputPath(const RunConfig& config, const std::string& path) {
  fs::path p(path);
  if (p.is_relative() && config.global.output_dir != ".") p = fs::path(config.global.output_dir) / p;
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  return p;
}

// Writes to `path` when given, else to stdout.
void Emit(Context& ctx, const std::string& path, const std::string& text) {
  if (path.empty()) {
    ctx.out << text;
  } else {
    WriteTextFile(OutputPath(ctx.config, path), text);
  }
}

WavFormat ParseWavFormat(const std::string& s) {
  if (s == "float32") return WavFormat::kFloat32;
  if (s == "pcm16") return WavFormat::kPcm16;
  throw ParameterError("--format must be float32 or pcm16");
}

InsertionLossProfile ConfiguredProfile(const RunConfig& c) {
  InsertionLossProfile p = c.acoustics.profile_dir.empty()
                               ? DefaultInsertionLossProfile()
                               : LoadInsertionLossProfile(c.acoustics.profile_dir);
  p.passband_gain_db = c.acoustics.passband_gain_db;
  p.carrier_band = {c.acoustics.carrier_band_lo_hz, c.acoustics.carrier_band_hi_hz};
  p.Validate();
  return p;
}

HearingModel ConfiguredHearing(const RunConfig& c) {
  if (c.acoustics.hearing_curve.empty()) return HearingModel();
  return HearingModel(ReadCurveCsv(c.acoustics.hearing_curve));
}

ArrayLayout ShippedLayout(const std::string& name) {
  for (auto& l : ShippedLayouts()) {
    if (l.name == name) return l;
  }
  std::string known;
  for (const auto& l : ShippedLayouts()) known += (known.empty() ? "" : ", ") + l.name;
  throw ParameterError("unknown layout '" + name + "' (shipped: " + known + ")");
}

EnvironmentScript DefaultEnvironment(const RunConfig& c, double bearing_deg) {
  EnvironmentScript env = SingleVictimEnvironment(c.attack.distance_m, bearing_deg,
                                                  c.attack.noise_db, c.attack.device_profile);
  c.ApplySim(env);
  env.rng_seed = c.global.seed;
  return env;
}

// --- subcommands ---

struct ModulateArgs {
  std::string in, out, format = "float32";
  std::optional<double> tone_hz;
  double amplitude = 0.5, duration_s = 0.1;
};

int RunModulate(Context& ctx, const ModulateArgs& a) {
  const auto& s = ctx.config.signals;
  Waveform base;
  if (!a.in.empty()) {
    if (a.tone_hz) throw ParameterError("give either --in or --tone-hz, not both");
    base = ReadWav(a.in);
  } else if (a.tone_hz) {
    base = Tone(*a.tone_hz, a.amplitude, a.duration_s, s.sample_rate_hz);
  } else {
    throw ParameterError("modulate needs --in or --tone-hz");
  }
  const Waveform mod = Modulate(base, s.carrier_hz, s.depth);
  const fs::path path = OutputPath(ctx.config, a.out);
  WriteWav(path, mod, ParseWavFormat(a.format));
  Json j;
  j["output"] = path.string();
  j["samples"] = mod.size();
  j["sample_rate_hz"] = mod.sample_rate_hz;
  j["carrier_hz"] = s.carrier_hz;
  j["depth"] = s.depth;
  ctx.out << j.dump(2) << "\n";
  return kExitOk;
}

struct DemodArgs {
  std::string in, out, reference, report, format = "float32";
  std::optional<double> noise_snr_db;
};

int RunDemod(Context& ctx, const DemodArgs& a) {
  const auto& s = ctx.config.signals;
  Waveform input = ReadWav(a.in);
  if (a.noise_snr_db) input = AddBackgroundNoise(input, *a.noise_snr_db, ctx.config.global.seed);
  const Recovered rec = RecoverBaseband(input, ctx.config.nonlinear(), s.cutoff_hz);
  Json j;
  j["input"] = a.in;
  j["samples"] = input.size();
  j["sample_rate_hz"] = input.sample_rate_hz;
  j["cutoff_hz"] = s.cutoff_hz;
  j["a1"] = s.a1;
  j["a2"] = s.a2;
  j["noise_snr_db"] = a.noise_snr_db ? Json(*a.noise_snr_db) : Json(nullptr);
  j["degenerate"] = rec.degenerate;
  j["recovered_rms"] = std::sqrt(MeanSquare(rec.audio.samples));
  if (!a.reference.empty()) {
    const Waveform ref = ReadWav(a.reference);
    if (ref.sample_rate_hz != input.sample_rate_hz || ref.size() != input.size()) {
      throw ParameterError("reference must match the input's sample rate and length");
    }
    j["reference"] = a.reference;
    j["correlation"] = Correlation(rec.audio.samples, ref.samples);
  } else {
    j["reference"] = nullptr;
    j["correlation"] = nullptr;
  }
  if (!a.out.empty()) {
    const fs::path path = OutputPath(ctx.config, a.out);
    WriteWav(path, rec.audio, ParseWavFormat(a.format));
    j["output"] = path.string();
  }
  Emit(ctx, a.report, j.dump(2) + "\n");
  return kExitOk;
}

struct LeakageArgs {
  std::string in, report, directions = "front,side,back";
};

int RunLeakage(Context& ctx, const LeakageArgs& a) {
  std::vector<Direction> dirs;
  for (auto f : SplitFields(a.directions)) dirs.push_back(ParseDirection(std::string(Trim(f))));
  const Waveform w = ReadWav(a.in);
  const LeakageReport r = MakeLeakageReport(w, ConfiguredProfile(ctx.config),
                                            ctx.config.acoustics.source_spl_ref_db, dirs,
                                            ConfiguredHearing(ctx.config));
  Emit(ctx, a.report, LeakageReportJson(r));
  return kExitOk;
}

struct FieldArgs {
  std::string layout, layout_name = "2x6", out;
};

int RunField(Context& ctx, const FieldArgs& a) {
  const auto& f = ctx.config.field;
  const ArrayLayout layout = a.layout.empty() ? ShippedLayout(a.layout_name) : ReadLayoutJson(a.layout);
  const double hw = f.grid_half_width_mm * 1e-3;
  const double step = f.grid_step_mm * 1e-3;
  const auto n = static_cast<long>(std::floor(2.0 * hw / step + 1e-9));
  if (n > 2000) throw ParameterError("field grid too large; raise field.grid_step_mm");
  std::vector<Vec3> pts;
  for (long iy = 0; iy <= n; ++iy) {
    for (long ix = 0; ix <= n; ++ix) {
      pts.push_back({-hw + static_cast<double>(ix) * step, -hw + static_cast<double>(iy) * step,
                     f.range_mm * 1e-3});
    }
  }
  const FieldGrid g = ArrayField(layout, f.frequency_hz, pts, ctx.config.mask(),
                                 ctx.config.rank_options().field);
  Emit(ctx, a.out, FormatFieldCsv(g));
  return kExitOk;
}

struct RankArgs {
  std::vector<std::string> layouts;
  std::string out;
};

int RunLayoutRank(Context& ctx, const RankArgs& a) {
  std::vector<ArrayLayout> layouts;
  if (a.layouts.empty()) {
    layouts = ShippedLayouts();
  } else {
    for (const auto& p : a.layouts) layouts.push_back(ReadLayoutJson(p));
  }
  const auto& f = ctx.config.field;
  const auto scores = RankLayouts(layouts, f.frequency_hz, f.range_mm * 1e-3, ctx.config.mask(),
                                  ctx.config.rank_options());
  Emit(ctx, a.out, LayoutRankingJson(scores));
  return kExitOk;
}

int RunSweep(Context& ctx, const std::string& table) {
  ctx.out << FormatSweepRow(SweepParameters(ReadSweepCsv(table))) << "\n";
  return kExitOk;
}

struct AttackArgs {
  std::string env, report, events;
  double bearing_deg = 60.0;
};

int RunAttackSim(Context& ctx, const AttackArgs& a, bool seed_given) {
  EnvironmentScript env;
  if (a.env.empty()) {
    env = DefaultEnvironment(ctx.config, a.bearing_deg);
  } else {
    env = ReadEnvironmentJson(a.env);
    if (seed_given) env.rng_seed = ctx.config.global.seed;
  }
  const SimResult r = Simulate(env, ctx.config.attack);
  Emit(ctx, a.report, SimResultJson(r));
  if (!a.events.empty()) {
    WriteTextFile(OutputPath(ctx.config, a.events), SimEventsJsonLines(r.events));
  }
  return kExitOk;
}

struct ReplayArgs {
  std::string log, report;
  bool restore = false;
  double start_s = 0.0;
  double command_s = 0.0;
};

// Moves the replay clock forward by the air time of every command.
class TimedSink : public CommandSink {
 public:
  TimedSink(ScanSource& clock, double command_s) : clock_(clock), command_s_(command_s) {}
  void Send(const Command& command) override {
    inner_.Send(command);
    if (command_s_ > 0.0) clock_.Wait(command_s_);
  }
  void ClearRecords() override { inner_.ClearRecords(); }

 private:
  ScanSource& clock_;
  double command_s_;
  RecordingSink inner_;
};

int RunScanReplay(Context& ctx, const ReplayArgs& a) {
  if (!(a.start_s >= 0.0) || !(a.command_s >= 0.0)) {
    throw ParameterError("--start-s and --command-s must be >= 0");
  }
  LogReplaySource source(ReadScanLog(a.log));
  TimedSink sink(source, a.command_s);
  source.Wait(a.start_s);
  const FeedbackOutcome o = FeedbackRound(source, sink, ctx.config.attack.feedback);
  std::optional<RestoreLog> restore;
  if (a.restore && o.success) restore = Restore(sink, o, *o.l1);
  Emit(ctx, a.report, FeedbackOutcomeJson(o, restore));
  return kExitOk;
}

struct RsaArgs {
  std::string env, out, format = "json";
};

int RunRsa(Context& ctx, const RsaArgs& a) {
  if (a.format != "json" && a.format != "csv") throw ParameterError("--format must be json or csv");
  const EnvironmentScript env = a.env.empty() ? DefaultEnvironment(ctx.config, 0.0)
                                              : ReadEnvironmentJson(a.env);
  const auto distances = ctx.config.rsa_distances();
  const RsaResult r = EstimateRsa(env, distances, ctx.config.sim.trials, ctx.config.global.seed);
  Emit(ctx, a.out, a.format == "json" ? RsaResultJson(r) : RsaResultCsv(r));
  return kExitOk;
}

void AddCommon(CLI::App* sub, Common& c, const std::vector<std::string>& groups) {
  sub->add_option("--config", c.config_path, "JSON config file");
  sub->add_option("--seed", c.seed, "master seed (overrides global.seed)");
  sub->add_option("--set", c.sets, "override a key: group.key=value (repeatable)");
  std::vector<std::string> g = {"global"};
  g.insert(g.end(), groups.begin(), groups.end());
  sub->footer("Config keys (--config file, --set, or HUSHWAVE_<GROUP>_<KEY>):\n" + ConfigHelp(g));
}

}  // namespace

std::vector<std::string> SubcommandNames() {
  return {"modulate",    "demod", "leakage",     "field", "layout-rank",
          "sweep",       "attack-sim", "scan-replay", "rsa"};
}

int Dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
             const EnvLookup& env) {
  CLI::App app{"Ultrasonic command injection research toolkit (simulation only)", "hushwave"};
  app.require_subcommand(1);

  std::map<std::string, Common> common;
  std::map<std::string, CLI::App*> subs;
  const auto add = [&](const std::string& name, const std::string& desc,
                       const std::vector<std::string>& groups) {
    CLI::App* s = app.add_subcommand(name, desc);
    AddCommon(s, common[name], groups);
    subs[name] = s;
    return s;
  };

  ModulateArgs mod;
  {
    auto* s = add("modulate", "baseband WAV -> AM ultrasonic WAV", {"signals"});
    s->add_option("--in", mod.in, "baseband WAV (samples within +/-1)");
    s->add_option("--tone-hz", mod.tone_hz, "synthesize a sine baseband instead of --in");
    s->add_option("--amplitude", mod.amplitude, "synthesized tone amplitude")->capture_default_str();
    s->add_option("--duration-s", mod.duration_s, "synthesized tone length in s")->capture_default_str();
    s->add_option("--out", mod.out, "output WAV")->required();
    s->add_option("--format", mod.format, "float32 or pcm16")->capture_default_str();
  }
  DemodArgs dem;
  {
    auto* s = add("demod", "AM WAV -> recovered baseband and correlation report", {"signals"});
    s->add_option("--in", dem.in, "received WAV")->required();
    s->add_option("--out", dem.out, "recovered WAV");
    s->add_option("--reference", dem.reference, "original baseband WAV for correlation");
    s->add_option("--noise-snr-db", dem.noise_snr_db, "add seeded Gaussian noise at this SNR");
    s->add_option("--report", dem.report, "JSON report path (default stdout)");
    s->add_option("--format", dem.format, "float32 or pcm16")->capture_default_str();
  }
  LeakageArgs leak;
  {
    auto* s = add("leakage", "audible leakage check per third-octave band", {"acoustics"});
    s->add_option("--in", leak.in, "emitted WAV")->required();
    s->add_option("--directions", leak.directions, "comma list of front, side, back")
        ->capture_default_str();
    s->add_option("--report", leak.report, "JSON report path (default stdout)");
  }
  FieldArgs fld;
  {
    auto* s = add("field", "complex pressure on a plane at field.range_mm, as CSV", {"field"});
    s->add_option("--layout", fld.layout, "layout JSON");
    s->add_option("--layout-name", fld.layout_name, "shipped layout when --layout is absent")
        ->capture_default_str();
    s->add_option("--out", fld.out, "CSV path (default stdout)");
  }
  RankArgs rank;
  {
    auto* s = add("layout-rank", "rank layouts by aperture phase planarity", {"field"});
    s->add_option("--layout", rank.layouts, "layout JSON (repeatable; default: shipped set)");
    s->add_option("--out", rank.out, "JSON path (default stdout)");
  }
  std::string sweep_table;
  {
    auto* s = add("sweep", "best row of an enhancement sweep table", {});
    s->add_option("--table", sweep_table, "CSV n_speakers,range_mm,carrier_hz,max_spl_db")->required();
  }
  AttackArgs atk;
  {
    auto* s = add("attack-sim", "simulate a full attack session",
                  {"attack", "sim"});
    s->add_option("--env", atk.env,
                  "environment JSON (default: one victim at attack.distance_m); its rng_seed is "
                  "used unless --seed is given");
    s->add_option("--bearing-deg", atk.bearing_deg, "victim bearing for the default environment")
        ->capture_default_str();
    s->add_option("--report", atk.report, "JSON path (default stdout)");
    s->add_option("--events", atk.events, "event log path, JSON lines");
  }
  ReplayArgs rep;
  {
    auto* s = add("scan-replay", "run one feedback round against a recorded scan log", {"attack"});
    s->add_option("--log", rep.log, "scan log, JSON lines of {t, ssid, bssid, rssi}")->required();
    s->add_flag("--restore", rep.restore, "run the restore step on success");
    s->add_option("--start-s", rep.start_s, "seconds after the first logged scan to take L1")->capture_default_str();
    s->add_option("--command-s", rep.command_s, "air time of each command in s")
        ->capture_default_str();
    s->add_option("--report", rep.report, "JSON path (default stdout)");
  }
  RsaArgs rsa;
  {
    auto* s = add("rsa", "Monte-Carlo range of successful attack", {"attack", "sim"});
    s->add_option("--env", rsa.env, "environment template JSON (default: one victim on axis)");
    s->add_option("--format", rsa.format, "json or csv")->capture_default_str();
    s->add_option("--out", rsa.out, "output path (default stdout)");
  }

  if (args.empty()) {
    err << app.help();
    return kExitInvalid;
  }

  std::vector<std::string> argv_store = {"hushwave"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }

  std::string name;
  for (const auto& [n, s] : subs) {
    if (s->parsed()) name = n;
  }
  try {
    Context ctx{BuildConfig(common[name], env), out, err};
    const bool seed_given = common[name].seed.has_value();
    if (name == "modulate") return RunModulate(ctx, mod);
    if (name == "demod") return RunDemod(ctx, dem);
    if (name == "leakage") return RunLeakage(ctx, leak);
    if (name == "field") return RunField(ctx, fld);
    if (name == "layout-rank") return RunLayoutRank(ctx, rank);
    if (name == "sweep") return RunSweep(ctx, sweep_table);
    if (name == "attack-sim") return RunAttackSim(ctx, atk, seed_given);
    if (name == "scan-replay") return RunScanReplay(ctx, rep);
    if (name == "rsa") return RunRsa(ctx, rsa);
    err << "error: no subcommand\n";
    return kExitInvalid;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
}

}  // namespace hushwave::cli
