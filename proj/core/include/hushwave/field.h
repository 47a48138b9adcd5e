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

// Free-space pressure fields of speaker arrays, the circular-piston pattern,
// a plane-wave planarity metric, layout ranking and the parameter-table
// selection rule.

#ifndef HUSHWAVE_FIELD_H_
#define HUSHWAVE_FIELD_H_

#include <complex>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hushwave {

inline constexpr double kSpeedOfSoundMps = 343.0;

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend bool operator==(const Vec3&, const Vec3&) = default;
};

struct ArrayLayout {
  std::string name;
  std::vector<Vec3> elements;  // metres
  double element_radius_m = 0.0;
  std::vector<double> amplitude_weights;  // empty means all 1
  std::vector<double> phase_offsets_rad;  // empty means all 0

  double weight(std::size_t i) const {
    return amplitude_weights.empty() ? 1.0 : amplitude_weights[i];
  }
  double phase(std::size_t i) const {
    return phase_offsets_rad.empty() ? 0.0 : phase_offsets_rad[i];
  }

  // Non-empty, finite, per-element vectors sized to match, and no two element
  // centres closer than two radii.
  void Validate() const;

  friend bool operator==(const ArrayLayout&, const ArrayLayout&) = default;
};

struct FieldGrid {
  std::vector<Vec3> points;
  std::vector<std::complex<double>> pressure;
};

// Binary aperture in the array plane. Elements whose centre lies outside the
// open disk are attenuated by `blocked_attenuation_db`.
struct ObstructionMask {
  double center_x_m = 0.0;
  double center_y_m = 0.0;
  double open_disk_diameter_m = 0.0225;
  double blocked_attenuation_db = 40.0;

  void Validate() const;
  bool IsOpen(const Vec3& element) const;
};

struct FieldOptions {
  double speed_of_sound_mps = kSpeedOfSoundMps;
  // Multiply each element's contribution by the piston pattern with the
  // element radius, axis along +z.
  bool piston_directivity = false;
};

// p = sum_j w_j exp(i (k R_j + phi_j)) / R_j, k = 2 pi f / c.
// Throws SingularityError if a point coincides with an element.
FieldGrid ArrayField(const ArrayLayout& layout, double frequency_hz,
                     std::span<const Vec3> points,
                     const std::optional<ObstructionMask>& mask = std::nullopt,
                     const FieldOptions& options = {});

// Signed 2 J1(x) / x, equal to 1 at x = 0.
double PistonPattern(double x);
// |2 J1(ka sin theta) / (ka sin theta)|, in [0, 1].
double PistonDirectivity(double ka, double theta_rad);

// Points on a square lattice of pitch `step_m` inside a disk in the plane
// z = `z_m`, centred on (cx, cy).
std::vector<Vec3> ApertureDiskPoints(double z_m, double diameter_m, double step_m,
                                     double center_x_m = 0.0, double center_y_m = 0.0);

// RMS phase deviation (rad) from the field's circular-mean phase over the
// points within `aperture_diameter_m` / 2 of the point-set centroid. The
// points must be coplanar within 1e-9 m and at least 16 must fall inside the
// aperture.
double Planarity(const FieldGrid& field, double aperture_diameter_m);

struct RankOptions {
  double aperture_diameter_m = 0.0225;
  double grid_step_m = 0.001;
  FieldOptions field;
};

struct LayoutScore {
  std::string name;
  double on_axis_level_db = 0.0;  // 20 log10 |p| at (cx, cy, R)
  double planarity_rad = 0.0;
  std::size_t input_index = 0;
};

// Scores every layout on an aperture disk at z = `range_m` and sorts by
// planarity ascending, then level descending, then name.
std::vector<LayoutScore> RankLayouts(std::span<const ArrayLayout> layouts,
                                     double frequency_hz, double range_m,
                                     const std::optional<ObstructionMask>& mask,
                                     const RankOptions& options = {});

struct SweepRow {
  int n_speakers = 0;
  double range_mm = 0.0;
  double carrier_hz = 0.0;
  double max_spl_db = 0.0;

  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

// Argmax of max_spl_db; ties go to fewer speakers, then lower carrier.
SweepRow SweepParameters(std::span<const SweepRow> table);

// CSV with header `n_speakers,range_mm,carrier_hz,max_spl_db`.
std::vector<SweepRow> ParseSweepCsv(std::string_view text);
std::vector<SweepRow> ReadSweepCsv(const std::filesystem::path& path);
// "12 speakers, 18 mm, 40200 Hz, 142 dB".
std::string FormatSweepRow(const SweepRow& row);

// CSV `x_mm,y_mm,z_mm,re,im,magnitude_db`.
std::string FormatFieldCsv(const FieldGrid& field);

}  // namespace hushwave

#endif  // HUSHWAVE_FIELD_H_
