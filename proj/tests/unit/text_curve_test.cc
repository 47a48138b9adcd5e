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

#include <gtest/gtest.h>

#include <cmath>

#include "hushwave/curve.h"
#include "hushwave/errors.h"
#include "hushwave/text.h"

namespace hushwave {
namespace {

TEST(Text, ParseAndFormatNumbers) {
  EXPECT_EQ(ParseDouble(" 1.25 ", "x"), 1.25);
  EXPECT_THROW(ParseDouble("1.2.3", "x"), FormatError);
  EXPECT_THROW(ParseDouble("", "x"), FormatError);
  EXPECT_THROW(ParseDouble("nan", "x"), FormatError);
  EXPECT_EQ(ParseInteger("-42", "x"), -42);
  EXPECT_THROW(ParseInteger("4.2", "x"), FormatError);
  for (double v : {0.1, 1.0 / 3.0, 40200.0, -1e-300, 123456789.125}) {
    EXPECT_EQ(ParseDouble(FormatNumber(v), "x"), v);
  }
  EXPECT_EQ(FormatNumber(46.1), "46.1");
}

TEST(Text, SplitFields) {
  const auto f = SplitFields("a, b ,c");
  ASSERT_EQ(f.size(), 3u);
  EXPECT_EQ(Trim(f[1]), "b");
}

TEST(Curve, LogFrequencyInterpolation) {
  const Curve c({{100, 10}, {200, 30}, {400, 30}});
  EXPECT_EQ(c.Evaluate(100), 10);
  EXPECT_NEAR(c.Evaluate(150), 10.0 + 20.0 * std::log2(1.5), 1e-12);
  EXPECT_NEAR(c.Evaluate(100.0 * std::sqrt(2.0)), 20.0, 1e-12);
  EXPECT_EQ(c.Evaluate(300), 30);
  EXPECT_FALSE(c.TryEvaluate(99.0).has_value());
  EXPECT_FALSE(c.Covers(400.5));
  EXPECT_THROW(c.Evaluate(401), ParameterError);
}

TEST(Curve, RejectsBadKnots) {
  EXPECT_THROW(Curve({}), ParameterError);
  EXPECT_THROW(Curve({{200, 1}, {100, 2}}), ParameterError);
  EXPECT_THROW(Curve({{100, 1}, {100, 2}}), ParameterError);
  EXPECT_THROW(Curve({{100, 1}, {200, NAN}}), ParameterError);
}

TEST(Curve, CsvRoundTrip) {
  const Curve c({{100, 46.1}, {125.8925, 50}, {5011.8723, 0.3}});
  const std::string text = FormatCurveCsv(c);
  EXPECT_EQ(text.substr(0, text.find('\n')), "freq_hz,value_db");
  EXPECT_EQ(ParseCurveCsv(text), c);
  EXPECT_EQ(c.Scaled(0.5).Evaluate(100), 23.05);
}

TEST(Curve, CsvErrors) {
  EXPECT_THROW(ParseCurveCsv("hz,db\n100,1\n200,2\n"), FormatError);
  EXPECT_THROW(ParseCurveCsv("freq_hz,value_db\n100,1\n200\n"), FormatError);
  EXPECT_THROW(ParseCurveCsv("freq_hz,value_db\n100,x\n200,1\n"), FormatError);
}

}  // namespace
}  // namespace hushwave
