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

#include "hushwave/field.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

#include "hushwave/errors.h"
#include "hushwave/text.h"

namespace hushwave {
namespace {

constexpr double kCoincidentM = 1e-12;
constexpr double kCoplanarTolM = 1e-9;
constexpr std::size_t kMinAperturePoints = 16;

bool Finite(const Vec3& v) {
  return std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z);
}

double Distance(const Vec3& a, const Vec3& b) {
  return std::hypot(a.x - b.x, a.y - b.y, a.z - b.z);
}

}  // namespace

void ArrayLayout::Validate() const {
  if (elements.empty()) throw ParameterError("layout '" + name + "' has no elements");
  if (!amplitude_weights.empty() && amplitude_weights.size() != elements.size()) {
    throw ParameterError("layout '" + name + "': weight count differs from element count");
  }
  if (!phase_offsets_rad.empty() && phase_offsets_rad.size() != elements.size()) {
    throw ParameterError("layout '" + name + "': phase count differs from element count");
  }
  if (!(element_radius_m >= 0.0) || !std::isfinite(element_radius_m)) {
    throw ParameterError("layout '" + name + "': element radius must be finite and >= 0");
  }
  for (const Vec3& e : elements) {
    if (!Finite(e)) throw ParameterError("layout '" + name + "': non-finite position");
  }
  for (double w : amplitude_weights) {
    if (!std::isfinite(w)) throw ParameterError("layout '" + name + "': non-finite weight");
  }
  for (double p : phase_offsets_rad) {
    if (!std::isfinite(p)) throw ParameterError("layout '" + name + "': non-finite phase");
  }
  if (element_radius_m > 0.0) {
    for (std::size_t i = 0; i < elements.size(); ++i) {
      for (std::size_t j = i + 1; j < elements.size(); ++j) {
        if (Distance(elements[i], elements[j]) < 2.0 * element_radius_m) {
          throw ParameterError("layout '" + name + "': elements " + std::to_string(i) +
                               " and " + std::to_string(j) + " overlap");
        }
      }
    }
  }
}

void ObstructionMask::Validate() const {
  if (!(open_disk_diameter_m > 0.0) || !std::isfinite(open_disk_diameter_m)) {
    throw ParameterError("mask diameter must be positive");
  }
  if (!(blocked_attenuation_db >= 0.0) || !std::isfinite(blocked_attenuation_db)) {
    throw ParameterError("mask attenuation must be finite and >= 0");
  }
  if (!std::isfinite(center_x_m) || !std::isfinite(center_y_m)) {
    throw ParameterError("mask centre must be finite");
  }
}

bool ObstructionMask::IsOpen(const Vec3& element) const {
  return std::hypot(element.x - center_x_m, element.y - center_y_m) <=
         0.5 * open_disk_diameter_m;
}

double PistonPattern(double x) {
  if (std::abs(x) < 1e-4) {
    // 2 J1(x)/x = 1 - x^2/8 + x^4/192 - ...
    const double x2 = x * x;
    return 1.0 - x2 / 8.0 + x2 * x2 / 192.0;
  }
  return 2.0 * std::cyl_bessel_j(1.0, std::abs(x)) / std::abs(x);
}

double PistonDirectivity(double ka, double theta_rad) {
  if (!(ka >= 0.0)) throw ParameterError("ka must be >= 0");
  const double x = ka * std::abs(std::sin(theta_rad));
  return std::clamp(std::abs(PistonPattern(x)), 0.0, 1.0);
}

FieldGrid ArrayField(const ArrayLayout& layout, double frequency_hz,
                     std::span<const Vec3> points,
                     const std::optional<ObstructionMask>& mask,
                     const FieldOptions& options) {
  layout.Validate();
  if (!(frequency_hz > 0.0) || !std::isfinite(frequency_hz)) {
    throw ParameterError("frequency must be positive");
  }
  if (!(options.speed_of_sound_mps > 0.0)) {
    throw ParameterError("speed of sound must be positive");
  }
  if (mask) mask->Validate();
  const double k = 2.0 * std::numbers::pi * frequency_hz / options.speed_of_sound_mps;
  const double ka = k * layout.element_radius_m;

  std::vector<double> gain(layout.elements.size());
  for (std::size_t j = 0; j < gain.size(); ++j) {
    gain[j] = layout.weight(j);
    if (mask && !mask->IsOpen(layout.elements[j])) {
      gain[j] *= std::pow(10.0, -mask->blocked_attenuation_db / 20.0);
    }
  }

  FieldGrid grid;
  grid.points.assign(points.begin(), points.end());
  grid.pressure.resize(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!Finite(points[i])) throw ParameterError("non-finite grid point");
    std::complex<double> p = 0.0;
    for (std::size_t j = 0; j < layout.elements.size(); ++j) {
      const Vec3& e = layout.elements[j];
      const double r = Distance(points[i], e);
      if (r < kCoincidentM) throw SingularityError(i, j);
      double g = gain[j];
      if (options.piston_directivity) {
        const double cos_t = std::clamp((points[i].z - e.z) / r, -1.0, 1.0);
        g *= PistonDirectivity(ka, std::acos(cos_t));
      }
      p += g * std::polar(1.0 / r, k * r + layout.phase(j));
    }
    grid.pressure[i] = p;
  }
  return grid;
}

std::vector<Vec3> ApertureDiskPoints(double z_m, double diameter_m, double step_m,
                                     double center_x_m, double center_y_m) {
  if (!(diameter_m > 0.0) || !(step_m > 0.0)) {
    throw ParameterError("aperture diameter and step must be positive");
  }
  const double r = 0.5 * diameter_m;
  const auto n = static_cast<long>(std::floor(r / step_m + 1e-9));
  std::vector<Vec3> pts;
  for (long ix = -n; ix <= n; ++ix) {
    for (long iy = -n; iy <= n; ++iy) {
      const double x = ix * step_m;
      const double y = iy * step_m;
      if (x * x + y * y <= r * r * (1.0 + 1e-12)) {
        pts.push_back({center_x_m + x, center_y_m + y, z_m});
      }
    }
  }
  return pts;
}

double Planarity(const FieldGrid& field, double aperture_diameter_m) {
  if (field.points.size() != field.pressure.size()) {
    throw ParameterError("field points and pressures differ in length");
  }
  if (!(aperture_diameter_m > 0.0)) throw ParameterError("aperture diameter must be positive");
  if (field.points.size() < kMinAperturePoints) {
    throw ParameterError("planarity needs at least 16 points inside the aperture");
  }
  const auto n = static_cast<Eigen::Index>(field.points.size());
  Eigen::MatrixX3d m(n, 3);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Vec3& p = field.points[static_cast<std::size_t>(i)];
    m.row(i) << p.x, p.y, p.z;
  }
  const Eigen::RowVector3d centroid = m.colwise().mean();
  const Eigen::MatrixX3d centered = m.rowwise() - centroid;
  Eigen::JacobiSVD<Eigen::MatrixX3d> svd(centered, Eigen::ComputeThinV);
  const Eigen::Vector3d normal = svd.matrixV().col(2);
  const Eigen::VectorXd offsets = centered * normal;
  if (offsets.cwiseAbs().maxCoeff() > kCoplanarTolM) {
    throw ParameterError("planarity points are not coplanar");
  }

  const double r = 0.5 * aperture_diameter_m;
  std::vector<std::complex<double>> inside;
  for (Eigen::Index i = 0; i < n; ++i) {
    const Eigen::RowVector3d d = centered.row(i);
    const double in_plane = std::sqrt(std::max(0.0, d.squaredNorm() - offsets(i) * offsets(i)));
    if (in_plane <= r * (1.0 + 1e-12)) {
      const auto& p = field.pressure[static_cast<std::size_t>(i)];
      if (!std::isfinite(p.real()) || !std::isfinite(p.imag())) {
        throw ParameterError("non-finite pressure");
      }
      inside.push_back(p);
    }
  }
  if (inside.size() < kMinAperturePoints) {
    throw ParameterError("planarity needs at least 16 points inside the aperture");
  }

  std::complex<double> sum = 0.0;
  for (const auto& p : inside) {
    if (std::abs(p) > 0.0) sum += p / std::abs(p);
  }
  const double ref = std::arg(sum);
  std::vector<double> dev(inside.size());
  for (std::size_t i = 0; i < inside.size(); ++i) {
    // Deviation in (-pi, pi] about the circular mean.
    dev[i] = std::arg(inside[i] * std::polar(1.0, -ref));
  }
  double mean = 0.0;
  for (double d : dev) mean += d;
  mean /= static_cast<double>(dev.size());
  double ss = 0.0;
  for (double d : dev) ss += (d - mean) * (d - mean);
  return std::sqrt(ss / static_cast<double>(dev.size()));
}

std::vector<LayoutScore> RankLayouts(std::span<const ArrayLayout> layouts,
                                     double frequency_hz, double range_m,
                                     const std::optional<ObstructionMask>& mask,
                                     const RankOptions& options) {
  if (layouts.size() < 2) throw ParameterError("ranking needs at least two layouts");
  if (!(range_m > 0.0)) throw ParameterError("range must be positive");
  const double cx = mask ? mask->center_x_m : 0.0;
  const double cy = mask ? mask->center_y_m : 0.0;
  const std::vector<Vec3> aperture =
      ApertureDiskPoints(range_m, options.aperture_diameter_m, options.grid_step_m, cx, cy);
  const Vec3 on_axis[] = {{cx, cy, range_m}};

  std::vector<LayoutScore> scores;
  for (std::size_t i = 0; i < layouts.size(); ++i) {
    const ArrayLayout& l = layouts[i];
    LayoutScore s;
    s.name = l.name;
    s.input_index = i;
    s.planarity_rad = Planarity(ArrayField(l, frequency_hz, aperture, mask, options.field),
                                options.aperture_diameter_m);
    const double mag =
        std::abs(ArrayField(l, frequency_hz, on_axis, mask, options.field).pressure[0]);
    s.on_axis_level_db = mag > 0.0 ? 20.0 * std::log10(mag) : -300.0;
    scores.push_back(std::move(s));
  }
  std::stable_sort(scores.begin(), scores.end(), [](const LayoutScore& a, const LayoutScore& b) {
    if (a.planarity_rad != b.planarity_rad) return a.planarity_rad < b.planarity_rad;
    if (a.on_axis_level_db != b.on_axis_level_db) return a.on_axis_level_db > b.on_axis_level_db;
    return a.name < b.name;
  });
  return scores;
}

SweepRow SweepParameters(std::span<const SweepRow> table) {
  if (table.empty()) throw ParameterError("sweep table is empty");
  std::set<int> seen;
  for (const SweepRow& r : table) {
    if (!seen.insert(r.n_speakers).second) {
      throw ParameterError("sweep table repeats n_speakers = " + std::to_string(r.n_speakers));
    }
    if (!std::isfinite(r.max_spl_db) || !std::isfinite(r.carrier_hz) ||
        !std::isfinite(r.range_mm)) {
      throw ParameterError("sweep table has a non-finite value");
    }
  }
  const auto better = [](const SweepRow& a, const SweepRow& b) {
    if (a.max_spl_db != b.max_spl_db) return a.max_spl_db > b.max_spl_db;
    if (a.n_speakers != b.n_speakers) return a.n_speakers < b.n_speakers;
    return a.carrier_hz < b.carrier_hz;
  };
  SweepRow best = table.front();
  for (const SweepRow& r : table.subspan(1)) {
    if (better(r, best)) best = r;
  }
  return best;
}

std::vector<SweepRow> ParseSweepCsv(std::string_view text) {
  std::vector<SweepRow> rows;
  int line_no = 0;
  bool header_seen = false;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const std::string_view line = Trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty()) continue;
    if (!header_seen) {
      if (line != "n_speakers,range_mm,carrier_hz,max_spl_db") {
        throw FormatError("sweep CSV must start with header "
                          "'n_speakers,range_mm,carrier_hz,max_spl_db'");
      }
      header_seen = true;
      continue;
    }
    const auto f = SplitFields(line);
    const std::string ctx = "sweep CSV line " + std::to_string(line_no);
    if (f.size() != 4) throw FormatError(ctx + ": expected four fields");
    SweepRow r;
    r.n_speakers = static_cast<int>(ParseInteger(f[0], ctx));
    r.range_mm = ParseDouble(f[1], ctx);
    r.carrier_hz = ParseDouble(f[2], ctx);
    r.max_spl_db = ParseDouble(f[3], ctx);
    rows.push_back(r);
  }
  if (!header_seen) throw FormatError("sweep CSV is empty");
  return rows;
}

std::vector<SweepRow> ReadSweepCsv(const std::filesystem::path& path) {
  return ParseSweepCsv(ReadTextFile(path));
}

std::string FormatSweepRow(const SweepRow& row) {
  return std::to_string(row.n_speakers) + " speakers, " + FormatNumber(row.range_mm) +
         " mm, " + FormatNumber(row.carrier_hz) + " Hz, " + FormatNumber(row.max_spl_db) +
         " dB";
}

std::string FormatFieldCsv(const FieldGrid& field) {
  std::ostringstream out;
  out << "x_mm,y_mm,z_mm,re,im,magnitude_db\n";
  for (std::size_t i = 0; i < field.points.size(); ++i) {
    const Vec3& p = field.points[i];
    const auto& v = field.pressure[i];
    const double mag = std::abs(v);
    out << FormatNumber(p.x * 1000.0) << ',' << FormatNumber(p.y * 1000.0) << ','
        << FormatNumber(p.z * 1000.0) << ',' << FormatNumber(v.real()) << ','
        << FormatNumber(v.imag()) << ','
        << FormatNumber(mag > 0.0 ? 20.0 * std::log10(mag) : -300.0) << '\n';
  }
  return out.str();
}

}  // namespace hushwave
