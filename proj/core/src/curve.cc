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

#include "hushwave/curve.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hushwave/errors.h"
#include "hushwave/text.h"

namespace hushwave {
Curve::Curve(std::vector<CurvePoint> points) : points_(std::move(points)) {
  if (points_.empty()) throw ParameterError("curve needs at least one knot");
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const auto& p = points_[i];
    if (!(p.frequency_hz > 0.0) || !std::isfinite(p.frequency_hz) ||
        !std::isfinite(p.value_db)) {
      throw ParameterError("curve knots need positive finite frequency and finite value");
    }
    if (i > 0 && !(p.frequency_hz > points_[i - 1].frequency_hz)) {
      throw ParameterError("curve frequencies must be strictly increasing");
    }
  }
}

bool Curve::Covers(double frequency_hz) const {
  return frequency_hz >= min_hz() && frequency_hz <= max_hz();
}

std::optional<double> Curve::TryEvaluate(double frequency_hz) const {
  if (!Covers(frequency_hz)) return std::nullopt;
  const auto it = std::lower_bound(
      points_.begin(), points_.end(), frequency_hz,
      [](const CurvePoint& p, double f) { return p.frequency_hz < f; });
  if (it->frequency_hz == frequency_hz) return it->value_db;
  const CurvePoint& hi = *it;
  const CurvePoint& lo = *(it - 1);
  const double t = std::log(frequency_hz / lo.frequency_hz) /
                   std::log(hi.frequency_hz / lo.frequency_hz);
  return lo.value_db + t * (hi.value_db - lo.value_db);
}

double Curve::Evaluate(double frequency_hz) const {
  const auto v = TryEvaluate(frequency_hz);
  if (!v) {
    throw ParameterError("frequency " + std::to_string(frequency_hz) +
                         " Hz is outside the curve domain");
  }
  return *v;
}

Curve Curve::Scaled(double factor) const {
  std::vector<CurvePoint> scaled = points_;
  for (auto& p : scaled) p.value_db *= factor;
  return Curve(std::move(scaled));
}

Curve ParseCurveCsv(std::string_view text) {
  std::vector<CurvePoint> points;
  int line_no = 0;
  bool header_seen = false;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = Trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty()) continue;
    if (!header_seen) {
      if (line != "freq_hz,value_db") {
        throw FormatError("curve CSV must start with header 'freq_hz,value_db'");
      }
      header_seen = true;
      continue;
    }
    const auto comma = line.find(',');
    if (comma == std::string_view::npos || line.find(',', comma + 1) != std::string_view::npos) {
      throw FormatError("curve CSV line " + std::to_string(line_no) + ": expected two fields");
    }
    const std::string ctx = "curve CSV line " + std::to_string(line_no);
    points.push_back({ParseDouble(line.substr(0, comma), ctx),
                      ParseDouble(line.substr(comma + 1), ctx)});
  }
  if (!header_seen) throw FormatError("curve CSV is empty");
  try {
    return Curve(std::move(points));
  } catch (const ParameterError& e) {
    throw FormatError(std::string("curve CSV: ") + e.what());
  }
}

std::string FormatCurveCsv(const Curve& curve) {
  std::ostringstream out;
  out << "freq_hz,value_db\n";
  for (const auto& p : curve.points()) {
    out << FormatNumber(p.frequency_hz) << ',' << FormatNumber(p.value_db) << '\n';
  }
  return out.str();
}

Curve ReadCurveCsv(const std::filesystem::path& path) {
  return ParseCurveCsv(ReadTextFile(path));
}

void WriteCurveCsv(const std::filesystem::path& path, const Curve& curve) {
  WriteTextFile(path, FormatCurveCsv(curve));
}

}  // namespace hushwave
