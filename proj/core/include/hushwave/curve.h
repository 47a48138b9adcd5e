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

#ifndef HUSHWAVE_CURVE_H_
#define HUSHWAVE_CURVE_H_

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hushwave {

struct CurvePoint {
  double frequency_hz = 0.0;
  double value_db = 0.0;

  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

// Frequency -> dB map, linear in dB against log frequency between knots.
// Knot frequencies are strictly increasing and positive.
class Curve {
 public:
  explicit Curve(std::vector<CurvePoint> points);

  std::span<const CurvePoint> points() const { return points_; }
  double min_hz() const { return points_.front().frequency_hz; }
  double max_hz() const { return points_.back().frequency_hz; }
  bool Covers(double frequency_hz) const;

  // Throws ParameterError outside [min_hz, max_hz].
  double Evaluate(double frequency_hz) const;
  std::optional<double> TryEvaluate(double frequency_hz) const;

  Curve Scaled(double factor) const;

  friend bool operator==(const Curve&, const Curve&) = default;

 private:
  std::vector<CurvePoint> points_;
};

// CSV with header `freq_hz,value_db`, one knot per line.
Curve ParseCurveCsv(std::string_view text);
std::string FormatCurveCsv(const Curve& curve);
Curve ReadCurveCsv(const std::filesystem::path& path);
void WriteCurveCsv(const std::filesystem::path& path, const Curve& curve);

}  // namespace hushwave

#endif  // HUSHWAVE_CURVE_H_
