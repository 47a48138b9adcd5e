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

#include <algorithm>
#include <map>

#include "hushwave/errors.h"
#include "hushwave/feedback.h"
#include "hushwave/text.h"
#include "json.hpp"

namespace hushwave {

using json = nlohmann::ordered_json;

std::vector<ScanSnapshot> ParseScanLog(std::string_view text) {
  std::map<double, ScanSnapshot> by_time;
  int line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const std::string_view line = Trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty()) continue;
    const std::string where = "scan log line " + std::to_string(line_no);
    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::parse_error& e) {
      throw FormatError(where + ": " + e.what());
    }
    if (!obj.is_object()) throw FormatError(where + ": expected an object");
    for (const auto& [key, _] : obj.items()) {
      if (key != "t" && key != "ssid" && key != "bssid" && key != "rssi") {
        throw FormatError(where + ": unknown key '" + key + "'");
      }
    }
    if (!obj.contains("t") || !obj["t"].is_number()) {
      throw FormatError(where + ": 't' must be a number");
    }
    // A bare {"t": ...} marks a scan that saw nothing.
    if (obj.size() == 1) {
      const double t = obj["t"].get<double>();
      by_time[t].t = t;
      continue;
    }
    if (!obj.contains("rssi") || !obj["rssi"].is_number()) {
      throw FormatError(where + ": 'rssi' must be a number");
    }
    if (!obj.contains("bssid") || !obj["bssid"].is_string()) {
      throw FormatError(where + ": 'bssid' must be a string");
    }
    if (!obj.contains("ssid") || !obj["ssid"].is_string()) {
      throw FormatError(where + ": 'ssid' must be a string");
    }
    HotspotRecord r{obj["ssid"].get<std::string>(), obj["bssid"].get<std::string>(),
                    obj["rssi"].get<double>(), obj["t"].get<double>()};
    ScanSnapshot& snap = by_time[r.t];
    snap.t = r.t;
    if (snap.Find(r.bssid)) {
      throw FormatError(where + ": bssid " + r.bssid + " repeated at t = " + FormatNumber(r.t));
    }
    snap.records.push_back(std::move(r));
  }
  std::vector<ScanSnapshot> out;
  for (auto& [t, snap] : by_time) {
    try {
      snap.Validate();
    } catch (const ParameterError& e) {
      throw FormatError(std::string("scan log: ") + e.what());
    }
    out.push_back(std::move(snap));
  }
  return out;
}

std::vector<ScanSnapshot> ReadScanLog(const std::filesystem::path& path) {
  return ParseScanLog(ReadTextFile(path));
}

std::string FormatScanLog(std::span<const ScanSnapshot> snapshots) {
  std::string out;
  for (const auto& s : snapshots) {
    if (s.records.empty()) out += json{{"t", s.t}}.dump() + "\n";
    for (const auto& r : s.records) {
      json obj;
      obj["t"] = r.t;
      obj["ssid"] = r.ssid;
      obj["bssid"] = r.bssid;
      obj["rssi"] = r.rssi_dbm;
      out += obj.dump() + "\n";
    }
  }
  return out;
}

}  // namespace hushwave
