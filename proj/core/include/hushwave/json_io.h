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

// JSON documents for reports and scripts. Output key order is fixed and
// numbers are written in shortest round-trip form, so equal inputs give
// byte-equal text.

#ifndef HUSHWAVE_JSON_IO_H_
#define HUSHWAVE_JSON_IO_H_

#include <filesystem>
#include <span>
#include <string>
#include <string_view>

#include "hushwave/acoustics.h"
#include "hushwave/attack.h"
#include "hushwave/corpus.h"
#include "hushwave/feedback.h"
#include "hushwave/field.h"
#include "hushwave/sim.h"

namespace hushwave {

std::string LeakageReportJson(const LeakageReport& report);
std::string FeedbackOutcomeJson(const FeedbackOutcome& outcome,
                                const std::optional<RestoreLog>& restore = std::nullopt);
std::string AttackReportJson(const AttackReport& report);
// Report plus ground truth.
std::string SimResultJson(const SimResult& result);
// One JSON object per line.
std::string SimEventsJsonLines(std::span<const SimEvent> events);
std::string RsaResultJson(const RsaResult& result);
// distance_m,trials,successes,rate,wilson_lo,wilson_hi
std::string RsaResultCsv(const RsaResult& result);
std::string LayoutRankingJson(std::span<const LayoutScore> scores);
std::string PrecisionRecallJson(const PrecisionRecall& pr);

// Strict: unknown keys and wrong types throw FormatError with the JSON path.
EnvironmentScript ParseEnvironmentJson(std::string_view text);
std::string FormatEnvironmentJson(const EnvironmentScript& env);
EnvironmentScript ReadEnvironmentJson(const std::filesystem::path& path);

}  // namespace hushwave

#endif  // HUSHWAVE_JSON_IO_H_
