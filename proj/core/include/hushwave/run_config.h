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

// Run configuration for the command-line tool.
//
// A config file is a JSON object of groups, each an object of keys:
//
//   {"attack": {"angle_step_deg": 12, "repeats_per_command": 5}}
//
// Missing keys keep their defaults. Unknown groups or keys, wrong types and
// out-of-range values are rejected with a "group.key" diagnostic. Any key can
// be overridden by the environment variable HUSHWAVE_<GROUP>_<KEY>, upper
// case, e.g. HUSHWAVE_ATTACK_ANGLE_STEP_DEG=6.

#ifndef HUSHWAVE_RUN_CONFIG_H_
#define HUSHWAVE_RUN_CONFIG_H_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hushwave/acoustics.h"
#include "hushwave/attack.h"
#include "hushwave/field.h"
#include "hushwave/signals.h"
#include "hushwave/sim.h"

namespace hushwave {

inline constexpr const char* kConfigEnvPrefix = "HUSHWAVE_";

struct RunConfig {
  struct Global {
    std::uint64_t seed = 1;
    std::string output_dir = ".";
    int verbosity = 0;
  } global;

  struct Signals {
    int sample_rate_hz = kDefaultSampleRateHz;
    double carrier_hz = kDefaultCarrierHz;
    double depth = 1.0;
    double a1 = 1.0;
    double a2 = 0.1;
    double cutoff_hz = 8000.0;
  } signals;

  struct Acoustics {
    double source_spl_ref_db = 60.0;  // level read for a full-scale sine
    double passband_gain_db = 11.0;
    double carrier_band_lo_hz = 36000.0;
    double carrier_band_hi_hz = 44400.0;
    std::string profile_dir;  // empty: built-in profile
    std::string hearing_curve;  // empty: analytic threshold
    double absorption_db_per_m = kDefaultAirAbsorptionDbPerM;
  } acoustics;

  struct Field {
    double frequency_hz = kDefaultCarrierHz;
    double speed_of_sound_mps = kSpeedOfSoundMps;
    double range_mm = 18.0;
    double aperture_mm = 22.5;
    double grid_step_mm = 1.0;
    double grid_half_width_mm = 30.0;
    bool use_mask = true;
    double mask_diameter_mm = 22.5;
    double mask_attenuation_db = 40.0;
    bool piston_directivity = false;
  } field;

  AttackConfig attack;

  struct Sim {
    double scan_period_s = 1.0;
    double duration_s = 3600.0;
    double rssi_jitter_db = 0.0;
    double command_duration_s = 1.0;
    double wind_mps = 0.0;
    int trials = 200;
    double rsa_min_m = 5.0;
    double rsa_max_m = 12.0;
    double rsa_step_m = 0.5;
  } sim;

  // Throws ParameterError naming the offending "group.key".
  void Validate() const;

  NonlinearCoeffs nonlinear() const { return {signals.a1, signals.a2}; }
  std::optional<ObstructionMask> mask() const;
  RankOptions rank_options() const;
  std::vector<double> rsa_distances() const;
  // Applies the sim group to a script: timing, jitter and wind.
  void ApplySim(EnvironmentScript& env) const;
};

enum class ConfigType { kNumber, kInteger, kUnsigned, kBool, kString };

struct ConfigKeyInfo {
  std::string group;
  std::string key;
  ConfigType type = ConfigType::kNumber;
  std::string unit;  // empty for dimensionless
  std::string description;
  std::string default_text;

  std::string dotted() const { return group + "." + key; }
  std::string env_var() const;
};

// Every accepted key in a stable order.
std::vector<ConfigKeyInfo> ConfigKeys();
// Keys of the given groups, for per-subcommand help.
std::vector<ConfigKeyInfo> ConfigKeys(const std::vector<std::string>& groups);
// "  group.key  (unit, default X)  description" lines.
std::string ConfigHelp(const std::vector<std::string>& groups);

// Sets one key from its textual form; the key is "group.key".
void SetConfigValue(RunConfig& config, std::string_view dotted_key, std::string_view value);

using EnvLookup = std::function<std::optional<std::string>(const std::string&)>;
// Reads the process environment.
EnvLookup ProcessEnv();

// Strict JSON parse on top of defaults. Malformed JSON is reported with its
// line and column.
RunConfig ParseRunConfig(std::string_view json_text);
// Defaults, overridden by overrides from `env`, then validated.
RunConfig ApplyEnvOverrides(RunConfig config, const EnvLookup& env);
// File then environment. Throws IoError if the file is unreadable.
RunConfig LoadRunConfig(const std::filesystem::path& path, const EnvLookup& env = ProcessEnv());
// Every key, grouped, in key-table order.
std::string FormatRunConfig(const RunConfig& config);

}  // namespace hushwave

#endif  // HUSHWAVE_RUN_CONFIG_H_
