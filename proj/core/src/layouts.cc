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

#include "hushwave/layouts.h"

#include <cmath>
#include <numbers>
#include <set>

#include "hushwave/errors.h"
#include "hushwave/text.h"
#include "json.hpp"

namespace hushwave {

using json = nlohmann::ordered_json;

ArrayLayout MakeGridLayout(int rows, int cols, double column_pitch_m, double row_pitch_m,
                           double element_radius_m) {
  if (rows < 1 || cols < 1) throw ParameterError("grid layout needs rows, cols >= 1");
  ArrayLayout l;
  l.name = std::to_string(rows) + "x" + std::to_string(cols);
  l.element_radius_m = element_radius_m;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      l.elements.push_back({(c - 0.5 * (cols - 1)) * column_pitch_m,
                            (r - 0.5 * (rows - 1)) * row_pitch_m, 0.0});
    }
  }
  l.Validate();
  return l;
}

ArrayLayout MakeRingLayout(std::string name, int count, double ring_radius_m,
                           double element_radius_m) {
  if (count < 1) throw ParameterError("ring layout needs at least one element");
  ArrayLayout l;
  l.name = std::move(name);
  l.element_radius_m = element_radius_m;
  for (int i = 0; i < count; ++i) {
    const double a = 2.0 * std::numbers::pi * i / count;
    l.elements.push_back({ring_radius_m * std::cos(a), ring_radius_m * std::sin(a), 0.0});
  }
  l.Validate();
  return l;
}

std::vector<ArrayLayout> ShippedLayouts() {
  std::vector<ArrayLayout> out;
  for (auto [r, c] : {std::pair{2, 6}, {3, 4}, {4, 3}, {1, 12}, {6, 2}}) {
    out.push_back(MakeGridLayout(r, c, kShippedColumnPitchM, kShippedRowPitchM,
                                 kShippedElementRadiusM));
  }
  out.push_back(MakeRingLayout("circular", 12, kShippedRingRadiusM, kShippedElementRadiusM));
  return out;
}

namespace {

const std::set<std::string>& LayoutKeys() {
  static const std::set<std::string> keys{"name", "element_radius_mm", "elements_mm",
                                          "weights", "phases_rad"};
  return keys;
}

double Number(const json& v, const std::string& where) {
  if (!v.is_number()) throw FormatError("layout JSON: " + where + " must be a number");
  return v.get<double>();
}

std::vector<double> NumberList(const json& v, const std::string& where) {
  if (!v.is_array()) throw FormatError("layout JSON: " + where + " must be an array");
  std::vector<double> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(Number(v[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

}  // namespace

ArrayLayout ParseLayoutJson(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("layout JSON: ") + e.what());
  }
  if (!doc.is_object()) throw FormatError("layout JSON must be an object");
  for (const auto& [key, _] : doc.items()) {
    if (!LayoutKeys().count(key)) throw FormatError("layout JSON: unknown key '" + key + "'");
  }
  for (const char* key : {"name", "elements_mm"}) {
    if (!doc.contains(key)) throw FormatError(std::string("layout JSON: missing '") + key + "'");
  }
  ArrayLayout l;
  if (!doc["name"].is_string()) throw FormatError("layout JSON: name must be a string");
  l.name = doc["name"].get<std::string>();
  if (doc.contains("element_radius_mm")) {
    l.element_radius_m = Number(doc["element_radius_mm"], "element_radius_mm") / 1000.0;
  }
  const json& els = doc["elements_mm"];
  if (!els.is_array()) throw FormatError("layout JSON: elements_mm must be an array");
  for (std::size_t i = 0; i < els.size(); ++i) {
    const std::string where = "elements_mm[" + std::to_string(i) + "]";
    const auto xyz = NumberList(els[i], where);
    if (xyz.size() != 3) throw FormatError("layout JSON: " + where + " needs 3 coordinates");
    l.elements.push_back({xyz[0] / 1000.0, xyz[1] / 1000.0, xyz[2] / 1000.0});
  }
  if (doc.contains("weights")) l.amplitude_weights = NumberList(doc["weights"], "weights");
  if (doc.contains("phases_rad")) l.phase_offsets_rad = NumberList(doc["phases_rad"], "phases_rad");
  l.Validate();
  return l;
}

std::string FormatLayoutJson(const ArrayLayout& layout) {
  json doc;
  doc["name"] = layout.name;
  doc["element_radius_mm"] = layout.element_radius_m * 1000.0;
  json els = json::array();
  for (const Vec3& e : layout.elements) {
    els.push_back({e.x * 1000.0, e.y * 1000.0, e.z * 1000.0});
  }
  doc["elements_mm"] = els;
  std::vector<double> w(layout.elements.size()), p(layout.elements.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    w[i] = layout.weight(i);
    p[i] = layout.phase(i);
  }
  doc["weights"] = w;
  doc["phases_rad"] = p;
  return doc.dump(2) + "\n";
}

ArrayLayout ReadLayoutJson(const std::filesystem::path& path) {
  return ParseLayoutJson(ReadTextFile(path));
}

}  // namespace hushwave
