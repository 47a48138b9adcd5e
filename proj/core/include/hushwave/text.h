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

// Small text helpers shared by the CSV readers and report writers.

#ifndef HUSHWAVE_TEXT_H_
#define HUSHWAVE_TEXT_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace hushwave {

std::string_view Trim(std::string_view s);

// Comma-separated fields, each trimmed.
std::vector<std::string_view> SplitFields(std::string_view line);

// Whole-field finite double; throws FormatError naming `context`.
double ParseDouble(std::string_view field, std::string_view context);
long long ParseInteger(std::string_view field, std::string_view context);

// Shortest decimal form that parses back to exactly `v`.
std::string FormatNumber(double v);

// Throws IoError on failure.
std::string ReadTextFile(const std::filesystem::path& path);
void WriteTextFile(const std::filesystem::path& path, std::string_view text);

}  // namespace hushwave

#endif  // HUSHWAVE_TEXT_H_
