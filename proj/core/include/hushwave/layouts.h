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

// Built-in array layouts and the layout JSON format.
//
// The six shipped layouts all hold 12 elements of radius 1.4 mm in the z = 0
// plane, centred on the origin. Rectangular layouts use a 3.0 mm column pitch
// (x) and an 8.0 mm row pitch (y). The circular layout is a 9 mm ring. The
// pitches are scaled down so the 2x6 block fits the 22.5 mm opening; the
// built device's 120 x 14 mm footprint is kept only as metadata.

#ifndef HUSHWAVE_LAYOUTS_H_
#define HUSHWAVE_LAYOUTS_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "hushwave/field.h"

namespace hushwave {

inline constexpr double kShippedColumnPitchM = 0.003;
inline constexpr double kShippedRowPitchM = 0.008;
inline constexpr double kShippedRingRadiusM = 0.009;
inline constexpr double kShippedElementRadiusM = 0.0014;

// rows x cols block centred on the origin, named "<rows>x<cols>".
ArrayLayout MakeGridLayout(int rows, int cols, double column_pitch_m, double row_pitch_m,
                           double element_radius_m);
// `count` elements evenly spaced on a ring, the first on +x.
ArrayLayout MakeRingLayout(std::string name, int count, double ring_radius_m,
                           double element_radius_m);

// 2x6, 3x4, 4x3, 1x12, 6x2, circular.
std::vector<ArrayLayout> ShippedLayouts();

// {"name": ..., "element_radius_mm": ..., "elements_mm": [[x, y, z], ...],
//  "weights": [...], "phases_rad": [...]}; the last two are optional.
ArrayLayout ParseLayoutJson(std::string_view text);
std::string FormatLayoutJson(const ArrayLayout& layout);
ArrayLayout ReadLayoutJson(const std::filesystem::path& path);

}  // namespace hushwave

#endif  // HUSHWAVE_LAYOUTS_H_
