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

#include "support/reference_feedback.h"

#include <cmath>
#include <map>
#include <optional>
#include <vector>

namespace hushwave::testing {
namespace {

using Series = std::vector<std::optional<double>>;

std::set<std::string> PresentAt(std::span<const ScanSnapshot> history, double t) {
  std::set<std::string> ids;
  for (const auto& s : history) {
    if (s.t != t) continue;
    for (const auto& r : s.records) ids.insert(r.bssid);
  }
  return ids;
}

bool AnyWeak(const Series& s, long from, long to, double floor) {
  for (long j = from; j <= to; ++j) {
    if (j < 0 || j >= static_cast<long>(s.size())) continue;
    if (s[j].has_value() && s[j].value() < floor) return true;
  }
  return false;
}

// Every presence edge in the series must be abrupt, and there must be one.
bool AllEdgesAbrupt(const Series& s, const AbruptFilterParams& p) {
  int edges = 0;
  for (long i = 0; i + 1 < static_cast<long>(s.size()); ++i) {
    const bool appear = !s[i] && s[i + 1];
    const bool vanish = s[i] && !s[i + 1];
    if (!appear && !vanish) continue;
    ++edges;
    const double level = appear ? *s[i + 1] : *s[i];
    if (std::fabs(level - p.absent_floor_dbm) >= p.delta_db_threshold) continue;
    if (level < p.strong_floor_dbm) return false;
    // Strong edge: the quiet side must hold no weak sighting.
    const bool ramp = appear ? AnyWeak(s, i + 1 - p.ramp_window, i, p.strong_floor_dbm)
                             : AnyWeak(s, i + 1, i + p.ramp_window, p.strong_floor_dbm);
    if (ramp) return false;
  }
  return edges > 0;
}

}  // namespace

ReferenceVerdict ReferenceFeedback(std::span<const ScanSnapshot> history,
                                   const std::array<double, 4>& scan_times,
                                   const AbruptFilterParams& params) {
  ReferenceVerdict v;
  const auto at2 = PresentAt(history, scan_times[1]);
  const auto at3 = PresentAt(history, scan_times[2]);
  if (at2 == at3) {
    v.decided_early = true;
    return v;
  }
  const auto at4 = PresentAt(history, scan_times[3]);

  // The round sees history up to its last scan.
  std::vector<ScanSnapshot> seen;
  for (const auto& s : history) {
    if (s.t <= scan_times[3]) seen.push_back(s);
  }
  std::map<std::string, Series> series;
  for (std::size_t i = 0; i < seen.size(); ++i) {
    for (const auto& r : seen[i].records) {
      auto& ser = series[r.bssid];
      ser.resize(seen.size());
      ser[i] = r.rssi_dbm;
    }
  }
  for (auto& [id, ser] : series) {
    ser.resize(seen.size());
    const bool pattern = at2.count(id) && !at3.count(id) && at4.count(id);
    if (pattern && AllEdgesAbrupt(ser, params)) v.targets.insert(id);
  }
  v.success = !v.targets.empty();
  return v;
}

}  // namespace hushwave::testing
