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

#include "hushwave/json_io.h"

#include <set>
#include <sstream>

#include "hushwave/errors.h"
#include "hushwave/text.h"
#include "json.hpp"

namespace hushwave {
namespace {

using Json = nlohmann::ordered_json;

Json Ids(const IdSet& ids) {
  Json a = Json::array();
  for (const auto& id : ids) a.push_back(id);
  return a;
}

Json Snapshot(const std::optional<ScanSnapshot>& s) {
  if (!s) return nullptr;
  Json j;
  j["t"] = s->t;
  Json recs = Json::array();
  for (const auto& r : s->records) {
    recs.push_back({{"ssid", r.ssid}, {"bssid", r.bssid}, {"rssi", r.rssi_dbm}});
  }
  j["records"] = recs;
  return j;
}

Json Outcome(const FeedbackOutcome& o, const std::optional<RestoreLog>& restore) {
  Json j;
  j["success"] = o.success;
  j["aborted"] = o.aborted;
  j["note"] = o.note;
  j["target"] = Ids(o.target_ids);
  j["L1"] = Snapshot(o.l1);
  j["L2"] = Snapshot(o.l2);
  j["L3"] = Snapshot(o.l3);
  j["L4"] = Snapshot(o.l4);
  j["dif1"] = Ids(o.dif1);
  j["dif2"] = Ids(o.dif2);
  j["candidates"] = Ids(o.candidates);
  j["filtered"] = Ids(o.filtered_ids);
  Json dec = Json::array();
  for (const auto& d : o.decisions) {
    dec.push_back({{"bssid", d.bssid}, {"keep", d.keep}, {"reason", d.reason}});
  }
  j["filter_decisions"] = dec;
  Json cmds = Json::array();
  for (const auto& c : o.commands) cmds.push_back(CommandKindName(c.kind));
  j["commands"] = cmds;
  if (restore) {
    Json r;
    r["performed"] = restore->performed;
    r["reason"] = restore->reason;
    r["actions"] = restore->actions;
    j["restore"] = r;
  } else {
    j["restore"] = nullptr;
  }
  return j;
}

Json Report(const AttackReport& r) {
  Json j;
  j["seed"] = r.seed;
  j["success"] = r.success;
  j["aborted"] = r.aborted;
  j["target"] = Ids(r.target_ids);
  j["success_angle_deg"] = r.success_angle_deg ? Json(*r.success_angle_deg) : Json(nullptr);
  j["angles_attempted"] = r.angles.size();
  j["commands_sent"] = r.command_log.size();
  j["t_start"] = r.t_start;
  j["t_end"] = r.t_end;
  Json angles = Json::array();
  for (const auto& a : r.angles) {
    Json aj;
    aj["angle_deg"] = a.angle_deg;
    aj["t_start"] = a.t_start;
    aj["t_end"] = a.t_end;
    aj["commands_sent"] = a.commands_sent;
    aj["feedback"] = Outcome(a.feedback, a.restore);
    angles.push_back(aj);
  }
  j["angles"] = angles;
  Json log = Json::array();
  for (const auto& c : r.command_log) {
    log.push_back({{"t", c.t}, {"angle_deg", c.angle_deg}, {"action", c.action}});
  }
  j["command_log"] = log;
  return j;
}

Json OptBool(const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); }

// --- strict reader helpers ---

class Reader {
 public:
  Reader(const Json& obj, std::string path, std::set<std::string> allowed)
      : obj_(obj), path_(std::move(path)) {
    if (!obj_.is_object()) throw FormatError(path_ + ": expected an object");
    for (const auto& [key, _] : obj_.items()) {
      if (!allowed.count(key)) throw FormatError(path_ + ": unknown key '" + key + "'");
    }
  }

  bool Has(const char* key) const { return obj_.contains(key); }
  const Json& At(const char* key) const { return obj_.at(key); }
  std::string Path(const char* key) const { return path_ + "." + key; }

  void Number(const char* key, double& out) const {
    if (!Has(key)) return;
    if (!At(key).is_number()) throw FormatError(Path(key) + ": expected a number");
    out = At(key).get<double>();
  }
  void Unsigned(const char* key, std::uint64_t& out) const {
    if (!Has(key)) return;
    if (!At(key).is_number_unsigned()) {
      throw FormatError(Path(key) + ": expected a non-negative integer");
    }
    out = At(key).get<std::uint64_t>();
  }
  void String(const char* key, std::string& out) const {
    if (!Has(key)) return;
    if (!At(key).is_string()) throw FormatError(Path(key) + ": expected a string");
    out = At(key).get<std::string>();
  }
  void Bool(const char* key, bool& out) const {
    if (!Has(key)) return;
    if (!At(key).is_boolean()) throw FormatError(Path(key) + ": expected true or false");
    out = At(key).get<bool>();
  }

 private:
  const Json& obj_;
  std::string path_;
};

DeliveryOverrides ReadOverrides(const Json& j, const std::string& path) {
  if (!j.is_object()) throw FormatError(path + ": expected an object");
  DeliveryOverrides o;
  for (const auto& [key, v] : j.items()) {
    CommandKind k;
    try {
      k = ParseCommandKind(key);
    } catch (const ParameterError&) {
      throw FormatError(path + ": unknown command kind '" + key + "'");
    }
    if (!v.is_number()) throw FormatError(path + "." + key + ": expected a number");
    o[k] = v.get<double>();
  }
  return o;
}

Json WriteOverrides(const DeliveryOverrides& o) {
  Json j = Json::object();
  for (const auto& [k, p] : o) j[CommandKindName(k)] = p;
  return j;
}

DeviceScript ReadDevice(const Json& j, const std::string& path) {
  Reader r(j, path,
           {"bssid", "ssid", "role", "x_m", "y_m", "carry", "speed_mps", "response_latency_s",
            "hotspot_initially_on", "rssi_dbm", "trajectory", "device_profile",
            "delivery_override"});
  DeviceScript d;
  if (!r.Has("bssid")) throw FormatError(path + ": missing 'bssid'");
  r.String("bssid", d.bssid);
  r.String("ssid", d.ssid);
  std::string s;
  if (r.Has("role")) {
    r.String("role", s);
    try {
      d.role = ParseDeviceRole(s);
    } catch (const ParameterError& e) {
      throw FormatError(r.Path("role") + ": " + e.what());
    }
  }
  r.Number("x_m", d.x_m);
  r.Number("y_m", d.y_m);
  if (r.Has("carry")) {
    r.String("carry", s);
    try {
      d.carry = ParseCarry(s);
    } catch (const ParameterError& e) {
      throw FormatError(r.Path("carry") + ": " + e.what());
    }
  }
  r.Number("speed_mps", d.speed_mps);
  r.Number("response_latency_s", d.response_latency_s);
  r.Bool("hotspot_initially_on", d.hotspot_initially_on);
  if (r.Has("rssi_dbm") && !r.At("rssi_dbm").is_null()) {
    double v = 0.0;
    r.Number("rssi_dbm", v);
    d.rssi_dbm = v;
  }
  if (r.Has("trajectory")) {
    const Json& t = r.At("trajectory");
    if (!t.is_array()) throw FormatError(r.Path("trajectory") + ": expected an array");
    for (std::size_t i = 0; i < t.size(); ++i) {
      const std::string kp = r.Path("trajectory") + "[" + std::to_string(i) + "]";
      const Json& k = t[i];
      if (!k.is_array() || k.size() != 2 || !k[0].is_number() ||
          !(k[1].is_number() || k[1].is_null())) {
        throw FormatError(kp + ": expected [t, rssi or null]");
      }
      RssiKnot knot{k[0].get<double>(), std::nullopt};
      if (k[1].is_number()) knot.rssi_dbm = k[1].get<double>();
      d.trajectory.push_back(knot);
    }
  }
  r.String("device_profile", d.device_profile);
  if (r.Has("delivery_override")) {
    d.delivery_override = ReadOverrides(r.At("delivery_override"), r.Path("delivery_override"));
  }
  return d;
}

Json WriteDevice(const DeviceScript& d) {
  Json j;
  j["bssid"] = d.bssid;
  j["ssid"] = d.ssid;
  j["role"] = DeviceRoleName(d.role);
  j["x_m"] = d.x_m;
  j["y_m"] = d.y_m;
  j["carry"] = CarryName(d.carry);
  j["speed_mps"] = d.speed_mps;
  j["response_latency_s"] = d.response_latency_s;
  j["hotspot_initially_on"] = d.hotspot_initially_on;
  j["rssi_dbm"] = d.rssi_dbm ? Json(*d.rssi_dbm) : Json(nullptr);
  Json t = Json::array();
  for (const auto& k : d.trajectory) {
    t.push_back({k.t, k.rssi_dbm ? Json(*k.rssi_dbm) : Json(nullptr)});
  }
  j["trajectory"] = t;
  j["device_profile"] = d.device_profile;
  j["delivery_override"] = WriteOverrides(d.delivery_override);
  return j;
}

}  // namespace

std::string LeakageReportJson(const LeakageReport& report) {
  Json j;
  j["pass"] = report.pass;
  j["worst_margin_db"] = report.worst_margin_db;
  j["source_spl_ref_db"] = report.source_spl_ref_db;
  j["profile"] = report.profile_label;
  const auto& g = report.geometry;
  j["geometry_mm"] = {{"d", g.hole_diameter_mm},          {"D", g.spiral_width_mm},
                      {"P", g.spiral_pitch_mm},           {"h", g.opening_height_mm},
                      {"gamma_deg", g.opening_angle_deg}, {"L1", g.l1_mm},
                      {"L2", g.l2_mm},                    {"L3", g.l3_mm},
                      {"L4", g.l4_mm},                    {"R", g.array_range_mm},
                      {"H2", g.total_length_mm},          {"array_x", g.array_extent_x_mm},
                      {"array_y", g.array_extent_y_mm}};
  Json dirs = Json::array();
  for (const auto& d : report.directions) {
    Json dj;
    dj["direction"] = DirectionName(d.direction);
    dj["pass"] = d.pass;
    Json bands = Json::array();
    for (const auto& b : d.bands) {
      bands.push_back({{"lo_hz", b.band.lo_hz},
                       {"hi_hz", b.band.hi_hz},
                       {"center_hz", b.center_hz},
                       {"source_db", b.source_db},
                       {"emitted_db", b.emitted_db},
                       {"threshold_db", b.threshold_db},
                       {"margin_db", b.margin_db},
                       {"pass", b.pass}});
    }
    dj["bands"] = bands;
    dirs.push_back(dj);
  }
  j["directions"] = dirs;
  return j.dump(2) + "\n";
}

std::string FeedbackOutcomeJson(const FeedbackOutcome& outcome,
                                const std::optional<RestoreLog>& restore) {
  return Outcome(outcome, restore).dump(2) + "\n";
}

std::string AttackReportJson(const AttackReport& report) { return Report(report).dump(2) + "\n"; }

std::string SimResultJson(const SimResult& result) {
  Json j;
  j["report"] = Report(result.report);
  const GroundTruth& g = result.truth;
  j["truth"] = {{"victim", g.victim_bssid},
                {"muted", g.muted},
                {"attacked", g.attacked},
                {"reset_delivered", g.reset_delivered},
                {"records_cleared", g.records_cleared},
                {"on_at_L2", OptBool(g.on_at_l2)},
                {"on_at_L3", OptBool(g.on_at_l3)},
                {"on_at_L4", OptBool(g.on_at_l4)},
                {"chain_success", g.chain_success}};
  return j.dump(2) + "\n";
}

std::string SimEventsJsonLines(std::span<const SimEvent> events) {
  std::string out;
  for (const auto& e : events) {
    Json j;
    j["t"] = e.t;
    j["type"] = e.type;
    if (!e.bssid.empty()) j["bssid"] = e.bssid;
    if (!e.command.empty()) j["command"] = e.command;
    if (e.value) j["value"] = *e.value;
    out += j.dump() + "\n";
  }
  return out;
}

std::string RsaResultJson(const RsaResult& result) {
  Json j;
  j["rsa_m"] = result.rsa_m ? Json(*result.rsa_m) : Json(nullptr);
  Json pts = Json::array();
  for (const auto& p : result.points) {
    pts.push_back({{"distance_m", p.distance_m},
                   {"trials", p.trials},
                   {"successes", p.successes},
                   {"rate", p.rate},
                   {"wilson_lo", p.wilson_lo},
                   {"wilson_hi", p.wilson_hi}});
  }
  j["points"] = pts;
  return j.dump(2) + "\n";
}

std::string RsaResultCsv(const RsaResult& result) {
  std::ostringstream out;
  out << "distance_m,trials,successes,rate,wilson_lo,wilson_hi\n";
  for (const auto& p : result.points) {
    out << FormatNumber(p.distance_m) << ',' << p.trials << ',' << p.successes << ','
        << FormatNumber(p.rate) << ',' << FormatNumber(p.wilson_lo) << ','
        << FormatNumber(p.wilson_hi) << '\n';
  }
  return out.str();
}

std::string LayoutRankingJson(std::span<const LayoutScore> scores) {
  Json a = Json::array();
  for (std::size_t i = 0; i < scores.size(); ++i) {
    a.push_back({{"rank", i + 1},
                 {"name", scores[i].name},
                 {"planarity_rad", scores[i].planarity_rad},
                 {"on_axis_level_db", scores[i].on_axis_level_db}});
  }
  return a.dump(2) + "\n";
}

std::string PrecisionRecallJson(const PrecisionRecall& pr) {
  Json j;
  j["scenarios"] = pr.results.size();
  j["tp"] = pr.tp;
  j["fp"] = pr.fp;
  j["fn"] = pr.fn;
  j["tn"] = pr.tn;
  j["precision"] = pr.precision ? Json(*pr.precision) : Json("no positives");
  j["recall"] = pr.recall ? Json(*pr.recall) : Json("vacuous");
  return j.dump(2) + "\n";
}

EnvironmentScript ParseEnvironmentJson(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw FormatError(std::string("environment JSON: ") + e.what());
  }
  Reader r(doc, "env",
           {"devices", "noise_db", "wind_mps", "scan_period_s", "duration_s", "rng_seed",
            "rssi_jitter_db", "command_duration_s", "delivery_override"});
  EnvironmentScript env;
  r.Number("noise_db", env.noise_db);
  r.Number("wind_mps", env.wind_mps);
  r.Number("scan_period_s", env.scan_period_s);
  r.Number("duration_s", env.duration_s);
  r.Unsigned("rng_seed", env.rng_seed);
  r.Number("rssi_jitter_db", env.rssi_jitter_db);
  r.Number("command_duration_s", env.command_duration_s);
  if (r.Has("delivery_override")) {
    env.delivery_override = ReadOverrides(r.At("delivery_override"), r.Path("delivery_override"));
  }
  if (r.Has("devices")) {
    const Json& devs = r.At("devices");
    if (!devs.is_array()) throw FormatError("env.devices: expected an array");
    for (std::size_t i = 0; i < devs.size(); ++i) {
      env.devices.push_back(ReadDevice(devs[i], "env.devices[" + std::to_string(i) + "]"));
    }
  }
  env.Validate();
  return env;
}

std::string FormatEnvironmentJson(const EnvironmentScript& env) {
  Json j;
  j["noise_db"] = env.noise_db;
  j["wind_mps"] = env.wind_mps;
  j["scan_period_s"] = env.scan_period_s;
  j["duration_s"] = env.duration_s;
  j["rng_seed"] = env.rng_seed;
  j["rssi_jitter_db"] = env.rssi_jitter_db;
  j["command_duration_s"] = env.command_duration_s;
  j["delivery_override"] = WriteOverrides(env.delivery_override);
  Json devs = Json::array();
  for (const auto& d : env.devices) devs.push_back(WriteDevice(d));
  j["devices"] = devs;
  return j.dump(2) + "\n";
}

EnvironmentScript ReadEnvironmentJson(const std::filesystem::path& path) {
  return ParseEnvironmentJson(ReadTextFile(path));
}

}  // namespace hushwave
