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

#include "hushwave/run_config.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>

#include "hushwave/errors.h"
#include "hushwave/text.h"
#include "json.hpp"

namespace hushwave {
namespace {

using Json = nlohmann::ordered_json;

enum class Check { kFinite, kPositive, kNonNegative, kUnit };

struct Entry {
  ConfigKeyInfo info;
  Check check = Check::kFinite;
  std::function<double*(RunConfig&)> number;
  std::function<int*(RunConfig&)> integer;
  std::function<std::uint64_t*(RunConfig&)> unsigned_int;
  std::function<bool*(RunConfig&)> boolean;
  std::function<std::string*(RunConfig&)> string;
};

Entry Num(std::string group, std::string key, std::string unit, std::string desc, Check check,
          std::function<double*(RunConfig&)> f) {
  Entry e;
  e.info = {std::move(group), std::move(key), ConfigType::kNumber, std::move(unit),
            std::move(desc), ""};
  e.check = check;
  e.number = std::move(f);
  return e;
}

Entry Int(std::string group, std::string key, std::string unit, std::string desc, Check check,
          std::function<int*(RunConfig&)> f) {
  Entry e;
  e.info = {std::move(group), std::move(key), ConfigType::kInteger, std::move(unit),
            std::move(desc), ""};
  e.check = check;
  e.integer = std::move(f);
  return e;
}

Entry Uns(std::string group, std::string key, std::string desc,
          std::function<std::uint64_t*(RunConfig&)> f) {
  Entry e;
  e.info = {std::move(group), std::move(key), ConfigType::kUnsigned, "", std::move(desc), ""};
  e.unsigned_int = std::move(f);
  return e;
}

Entry Bool(std::string group, std::string key, std::string desc,
           std::function<bool*(RunConfig&)> f) {
  Entry e;
  e.info = {std::move(group), std::move(key), ConfigType::kBool, "", std::move(desc), ""};
  e.boolean = std::move(f);
  return e;
}

Entry Str(std::string group, std::string key, std::string desc,
          std::function<std::string*(RunConfig&)> f) {
  Entry e;
  e.info = {std::move(group), std::move(key), ConfigType::kString, "", std::move(desc), ""};
  e.string = std::move(f);
  return e;
}

std::string ValueText(const Entry& e, RunConfig& c) {
  switch (e.info.type) {
    case ConfigType::kNumber:
      return FormatNumber(*e.number(c));
    case ConfigType::kInteger:
      return std::to_string(*e.integer(c));
    case ConfigType::kUnsigned:
      return std::to_string(*e.unsigned_int(c));
    case ConfigType::kBool:
      return *e.boolean(c) ? "true" : "false";
    case ConfigType::kString:
      return "\"" + *e.string(c) + "\"";
  }
  return "";
}

const std::vector<Entry>& Table() {
  static const std::vector<Entry> table = [] {
    using C = RunConfig;
    std::vector<Entry> t = {
        Uns("global", "seed", "master seed for every stochastic output",
            [](C& c) { return &c.global.seed; }),
        Str("global", "output_dir", "directory for written outputs",
            [](C& c) { return &c.global.output_dir; }),
        Int("global", "verbosity", "", "0 quiet, 1 progress, 2 detail", Check::kNonNegative,
            [](C& c) { return &c.global.verbosity; }),

        Int("signals", "sample_rate_hz", "Hz", "sample rate for generated audio",
            Check::kPositive, [](C& c) { return &c.signals.sample_rate_hz; }),
        Num("signals", "carrier_hz", "Hz", "ultrasonic carrier frequency", Check::kPositive,
            [](C& c) { return &c.signals.carrier_hz; }),
        Num("signals", "depth", "", "modulation depth in (0, 1]", Check::kUnit,
            [](C& c) { return &c.signals.depth; }),
        Num("signals", "a1", "", "microphone linear coefficient", Check::kFinite,
            [](C& c) { return &c.signals.a1; }),
        Num("signals", "a2", "", "microphone quadratic coefficient", Check::kNonNegative,
            [](C& c) { return &c.signals.a2; }),
        Num("signals", "cutoff_hz", "Hz", "recovery low-pass cutoff", Check::kPositive,
            [](C& c) { return &c.signals.cutoff_hz; }),

        Num("acoustics", "source_spl_ref_db", "dB SPL", "level read for a full-scale sine",
            Check::kFinite, [](C& c) { return &c.acoustics.source_spl_ref_db; }),
        Num("acoustics", "passband_gain_db", "dB", "front gain inside the carrier band",
            Check::kFinite, [](C& c) { return &c.acoustics.passband_gain_db; }),
        Num("acoustics", "carrier_band_lo_hz", "Hz", "lower edge of the gain band",
            Check::kPositive, [](C& c) { return &c.acoustics.carrier_band_lo_hz; }),
        Num("acoustics", "carrier_band_hi_hz", "Hz", "upper edge of the gain band",
            Check::kPositive, [](C& c) { return &c.acoustics.carrier_band_hi_hz; }),
        Str("acoustics", "profile_dir", "directory with front/side/back CSVs; empty for built-in",
            [](C& c) { return &c.acoustics.profile_dir; }),
        Str("acoustics", "hearing_curve", "threshold CSV; empty for the analytic curve",
            [](C& c) { return &c.acoustics.hearing_curve; }),
        Num("acoustics", "absorption_db_per_m", "dB/m", "air absorption at the carrier",
            Check::kNonNegative, [](C& c) { return &c.acoustics.absorption_db_per_m; }),

        Num("field", "frequency_hz", "Hz", "field evaluation frequency", Check::kPositive,
            [](C& c) { return &c.field.frequency_hz; }),
        Num("field", "speed_of_sound_mps", "m/s", "speed of sound", Check::kPositive,
            [](C& c) { return &c.field.speed_of_sound_mps; }),
        Num("field", "range_mm", "mm", "array to aperture distance", Check::kPositive,
            [](C& c) { return &c.field.range_mm; }),
        Num("field", "aperture_mm", "mm", "planarity disk diameter", Check::kPositive,
            [](C& c) { return &c.field.aperture_mm; }),
        Num("field", "grid_step_mm", "mm", "sampling step on the evaluation plane",
            Check::kPositive, [](C& c) { return &c.field.grid_step_mm; }),
        Num("field", "grid_half_width_mm", "mm", "half width of the field CSV plane",
            Check::kPositive, [](C& c) { return &c.field.grid_half_width_mm; }),
        Bool("field", "use_mask", "attenuate elements outside the opening",
             [](C& c) { return &c.field.use_mask; }),
        Num("field", "mask_diameter_mm", "mm", "open disk diameter", Check::kPositive,
            [](C& c) { return &c.field.mask_diameter_mm; }),
        Num("field", "mask_attenuation_db", "dB", "attenuation of blocked elements",
            Check::kNonNegative, [](C& c) { return &c.field.mask_attenuation_db; }),
        Bool("field", "piston_directivity", "apply per-element piston pattern",
             [](C& c) { return &c.field.piston_directivity; }),

        Num("attack", "angle_start_deg", "deg", "first aim angle", Check::kFinite,
            [](C& c) { return &c.attack.angle_start_deg; }),
        Num("attack", "angle_end_deg", "deg", "last aim angle", Check::kFinite,
            [](C& c) { return &c.attack.angle_end_deg; }),
        Num("attack", "angle_step_deg", "deg", "aim increment", Check::kPositive,
            [](C& c) { return &c.attack.angle_step_deg; }),
        Int("attack", "repeats_per_command", "", "sends of Mute and Attack per angle",
            Check::kPositive, [](C& c) { return &c.attack.repeats_per_command; }),
        Num("attack", "distance_m", "m", "victim distance for built-in scenarios",
            Check::kPositive, [](C& c) { return &c.attack.distance_m; }),
        Num("attack", "noise_db", "dB SPL", "ambient noise for built-in scenarios",
            Check::kFinite, [](C& c) { return &c.attack.noise_db; }),
        Str("attack", "device_profile", "delivery profile: average or iphone14pro",
            [](C& c) { return &c.attack.device_profile; }),
        Num("attack", "window_s", "s", "wait after each feedback command", Check::kNonNegative,
            [](C& c) { return &c.attack.feedback.window_s; }),
        Num("attack", "delta_db_threshold", "dB", "edge jump counted as abrupt",
            Check::kPositive, [](C& c) { return &c.attack.feedback.filter.delta_db_threshold; }),
        Int("attack", "ramp_window", "scans", "look-back for weak precursors", Check::kPositive,
            [](C& c) { return &c.attack.feedback.filter.ramp_window; }),
        Num("attack", "strong_floor_dbm", "dBm", "edge level counted as strong", Check::kFinite,
            [](C& c) { return &c.attack.feedback.filter.strong_floor_dbm; }),
        Num("attack", "absent_floor_dbm", "dBm", "level assigned to an absent hotspot",
            Check::kFinite, [](C& c) { return &c.attack.feedback.filter.absent_floor_dbm; }),

        Num("sim", "scan_period_s", "s", "time between scans", Check::kPositive,
            [](C& c) { return &c.sim.scan_period_s; }),
        Num("sim", "duration_s", "s", "scan horizon", Check::kPositive,
            [](C& c) { return &c.sim.duration_s; }),
        Num("sim", "rssi_jitter_db", "dB", "Gaussian RSSI jitter", Check::kNonNegative,
            [](C& c) { return &c.sim.rssi_jitter_db; }),
        Num("sim", "command_duration_s", "s", "air time of one command", Check::kPositive,
            [](C& c) { return &c.sim.command_duration_s; }),
        Num("sim", "wind_mps", "m/s", "wind speed", Check::kNonNegative,
            [](C& c) { return &c.sim.wind_mps; }),
        Int("sim", "trials", "", "trials per RSA distance", Check::kPositive,
            [](C& c) { return &c.sim.trials; }),
        Num("sim", "rsa_min_m", "m", "first RSA distance", Check::kPositive,
            [](C& c) { return &c.sim.rsa_min_m; }),
        Num("sim", "rsa_max_m", "m", "last RSA distance", Check::kPositive,
            [](C& c) { return &c.sim.rsa_max_m; }),
        Num("sim", "rsa_step_m", "m", "RSA distance step", Check::kPositive,
            [](C& c) { return &c.sim.rsa_step_m; }),
    };
    RunConfig defaults;
    for (auto& e : t) e.info.default_text = ValueText(e, defaults);
    return t;
  }();
  return table;
}

const Entry& Find(std::string_view dotted) {
  for (const auto& e : Table()) {
    if (e.info.dotted() == dotted) return e;
  }
  throw ParameterError("unknown config key '" + std::string(dotted) + "'");
}

void CheckNumber(const Entry& e, double v) {
  const std::string k = e.info.dotted();
  if (!std::isfinite(v)) throw ParameterError(k + ": must be finite");
  switch (e.check) {
    case Check::kFinite:
      break;
    case Check::kPositive:
      if (!(v > 0.0)) throw ParameterError(k + ": must be > 0");
      break;
    case Check::kNonNegative:
      if (!(v >= 0.0)) throw ParameterError(k + ": must be >= 0");
      break;
    case Check::kUnit:
      if (!(v >= 0.0 && v <= 1.0)) throw ParameterError(k + ": must be in [0, 1]");
      break;
  }
}

void CheckAll(const RunConfig& config) {
  RunConfig c = config;
  for (const auto& e : Table()) {
    if (e.number) CheckNumber(e, *e.number(c));
    if (e.integer) CheckNumber(e, static_cast<double>(*e.integer(c)));
  }
}

bool ParseBoolText(std::string_view s, const std::string& key) {
  const std::string_view t = Trim(s);
  if (t == "true" || t == "1") return true;
  if (t == "false" || t == "0") return false;
  throw ParameterError(key + ": expected true or false, got '" + std::string(t) + "'");
}

void SetFromJson(RunConfig& c, const Entry& e, const Json& v) {
  const std::string k = e.info.dotted();
  switch (e.info.type) {
    case ConfigType::kNumber:
      if (!v.is_number()) throw ParameterError(k + ": expected a number");
      *e.number(c) = v.get<double>();
      break;
    case ConfigType::kInteger: {
      if (!v.is_number_integer()) throw ParameterError(k + ": expected an integer");
      const auto x = v.get<long long>();
      if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max()) {
        throw ParameterError(k + ": out of range");
      }
      *e.integer(c) = static_cast<int>(x);
      break;
    }
    case ConfigType::kUnsigned:
      if (!v.is_number_unsigned()) throw ParameterError(k + ": expected a non-negative integer");
      *e.unsigned_int(c) = v.get<std::uint64_t>();
      break;
    case ConfigType::kBool:
      if (!v.is_boolean()) throw ParameterError(k + ": expected true or false");
      *e.boolean(c) = v.get<bool>();
      break;
    case ConfigType::kString:
      if (!v.is_string()) throw ParameterError(k + ": expected a string");
      *e.string(c) = v.get<std::string>();
      break;
  }
}

std::pair<std::size_t, std::size_t> LineColumn(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

std::string ConfigKeyInfo::env_var() const {
  std::string out = kConfigEnvPrefix;
  for (char ch : group + "_" + key) {
    out += static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  }
  return out;
}

void RunConfig::Validate() const {
  CheckAll(*this);
  const auto fail = [](const std::string& k, const std::string& what) {
    throw ParameterError(k + ": " + what);
  };
  const double nyquist = 0.5 * signals.sample_rate_hz;
  if (signals.carrier_hz >= nyquist) fail("signals.carrier_hz", "must be below Nyquist");
  if (signals.cutoff_hz >= nyquist) fail("signals.cutoff_hz", "must be below Nyquist");
  if (!(signals.depth > 0.0)) fail("signals.depth", "must be > 0");
  if (acoustics.carrier_band_hi_hz <= acoustics.carrier_band_lo_hz) {
    fail("acoustics.carrier_band_hi_hz", "must exceed carrier_band_lo_hz");
  }
  if (attack.angle_end_deg < attack.angle_start_deg) {
    fail("attack.angle_end_deg", "must be >= angle_start_deg");
  }
  try {
    ProfileByName(attack.device_profile);
  } catch (const ParameterError& e) {
    fail("attack.device_profile", e.what());
  }
  if (field.grid_step_mm > field.aperture_mm) fail("field.grid_step_mm", "exceeds aperture_mm");
  if (sim.rsa_max_m < sim.rsa_min_m) fail("sim.rsa_max_m", "must be >= rsa_min_m");
}

std::optional<ObstructionMask> RunConfig::mask() const {
  if (!field.use_mask) return std::nullopt;
  ObstructionMask m;
  m.open_disk_diameter_m = field.mask_diameter_mm * 1e-3;
  m.blocked_attenuation_db = field.mask_attenuation_db;
  return m;
}

RankOptions RunConfig::rank_options() const {
  RankOptions o;
  o.aperture_diameter_m = field.aperture_mm * 1e-3;
  o.grid_step_m = field.grid_step_mm * 1e-3;
  o.field.speed_of_sound_mps = field.speed_of_sound_mps;
  o.field.piston_directivity = field.piston_directivity;
  return o;
}

std::vector<double> RunConfig::rsa_distances() const {
  std::vector<double> out;
  const auto n = static_cast<long>(std::floor((sim.rsa_max_m - sim.rsa_min_m) / sim.rsa_step_m + 1e-9));
  for (long i = 0; i <= n; ++i) out.push_back(sim.rsa_min_m + static_cast<double>(i) * sim.rsa_step_m);
  return out;
}

void RunConfig::ApplySim(EnvironmentScript& env) const {
  env.scan_period_s = sim.scan_period_s;
  env.duration_s = sim.duration_s;
  env.rssi_jitter_db = sim.rssi_jitter_db;
  env.command_duration_s = sim.command_duration_s;
  env.wind_mps = sim.wind_mps;
}

std::vector<ConfigKeyInfo> ConfigKeys() {
  std::vector<ConfigKeyInfo> out;
  for (const auto& e : Table()) out.push_back(e.info);
  return out;
}

std::vector<ConfigKeyInfo> ConfigKeys(const std::vector<std::string>& groups) {
  std::vector<ConfigKeyInfo> out;
  for (const auto& e : Table()) {
    if (std::find(groups.begin(), groups.end(), e.info.group) != groups.end()) {
      out.push_back(e.info);
    }
  }
  return out;
}

std::string ConfigHelp(const std::vector<std::string>& groups) {
  std::ostringstream out;
  for (const auto& k : ConfigKeys(groups)) {
    std::string lhs = "  " + k.dotted();
    if (lhs.size() < 34) lhs.resize(34, ' ');
    out << lhs << "(" << (k.unit.empty() ? "" : k.unit + ", ") << "default " << k.default_text
        << ")  " << k.description << "\n";
  }
  return out.str();
}

void SetConfigValue(RunConfig& config, std::string_view dotted_key, std::string_view value) {
  const Entry& e = Find(dotted_key);
  const std::string k = e.info.dotted();
  try {
    switch (e.info.type) {
      case ConfigType::kNumber:
        *e.number(config) = ParseDouble(value, k);
        break;
      case ConfigType::kInteger: {
        const long long x = ParseInteger(value, k);
        if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max()) {
          throw ParameterError(k + ": out of range");
        }
        *e.integer(config) = static_cast<int>(x);
        break;
      }
      case ConfigType::kUnsigned: {
        const long long x = ParseInteger(value, k);
        if (x < 0) throw ParameterError(k + ": must be >= 0");
        *e.unsigned_int(config) = static_cast<std::uint64_t>(x);
        break;
      }
      case ConfigType::kBool:
        *e.boolean(config) = ParseBoolText(value, k);
        break;
      case ConfigType::kString:
        *e.string(config) = std::string(value);
        break;
    }
  } catch (const FormatError& err) {
    throw ParameterError(err.what());
  }
}

EnvLookup ProcessEnv() {
  return [](const std::string& name) -> std::optional<std::string> {
    const char* v = std::getenv(name.c_str());
    if (v == nullptr) return std::nullopt;
    return std::string(v);
  };
}

RunConfig ParseRunConfig(std::string_view json_text) {
  Json doc;
  try {
    doc = Json::parse(json_text);
  } catch (const Json::parse_error& e) {
    const auto [line, col] = LineColumn(json_text, e.byte);
    throw ParameterError("config: malformed JSON at line " + std::to_string(line) + ", column " +
                         std::to_string(col));
  }
  if (!doc.is_object()) throw ParameterError("config: top level must be an object");
  RunConfig c;
  for (const auto& [group, body] : doc.items()) {
    bool known = false;
    for (const auto& e : Table()) known = known || e.info.group == group;
    if (!known) throw ParameterError("config: unknown group '" + group + "'");
    if (!body.is_object()) throw ParameterError(group + ": expected an object");
    for (const auto& [key, value] : body.items()) {
      SetFromJson(c, Find(group + "." + key), value);
    }
  }
  c.Validate();
  return c;
}

RunConfig ApplyEnvOverrides(RunConfig config, const EnvLookup& env) {
  for (const auto& e : Table()) {
    const std::string var = e.info.env_var();
    if (auto v = env(var)) {
      try {
        SetConfigValue(config, e.info.dotted(), *v);
      } catch (const ParameterError& err) {
        throw ParameterError(std::string(err.what()) + " (from " + var + ")");
      }
    }
  }
  config.Validate();
  return config;
}

RunConfig LoadRunConfig(const std::filesystem::path& path, const EnvLookup& env) {
  return ApplyEnvOverrides(ParseRunConfig(ReadTextFile(path)), env);
}

std::string FormatRunConfig(const RunConfig& config) {
  RunConfig c = config;
  Json doc = Json::object();
  for (const auto& e : Table()) {
    Json& g = doc[e.info.group];
    switch (e.info.type) {
      case ConfigType::kNumber:
        g[e.info.key] = *e.number(c);
        break;
      case ConfigType::kInteger:
        g[e.info.key] = *e.integer(c);
        break;
      case ConfigType::kUnsigned:
        g[e.info.key] = *e.unsigned_int(c);
        break;
      case ConfigType::kBool:
        g[e.info.key] = *e.boolean(c);
        break;
      case ConfigType::kString:
        g[e.info.key] = *e.string(c);
        break;
    }
  }
  return doc.dump(2) + "\n";
}

}  // namespace hushwave
