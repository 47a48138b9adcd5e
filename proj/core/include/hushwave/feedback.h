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

// Hotspot scan data, the appear / disappear / reappear feedback round and the
// abrupt-transition filter that separates commanded hotspots from background
// ones.

#ifndef HUSHWAVE_FEEDBACK_H_
#define HUSHWAVE_FEEDBACK_H_

#include <filesystem>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hushwave {

using IdSet = std::set<std::string>;

enum class CommandKind { kMute, kAttack, kFeedback1, kFeedback2, kReset };

std::string CommandKindName(CommandKind kind);
CommandKind ParseCommandKind(std::string_view name);

inline constexpr CommandKind kAllCommandKinds[] = {CommandKind::kMute, CommandKind::kAttack,
                                                   CommandKind::kFeedback1,
                                                   CommandKind::kFeedback2, CommandKind::kReset};

// Default symbolic payloads interpreted by the simulator.
std::string DefaultPayload(CommandKind kind);

struct Command {
  CommandKind kind = CommandKind::kMute;
  std::string payload;

  friend bool operator==(const Command&, const Command&) = default;
};

Command MakeCommand(CommandKind kind);

struct HotspotRecord {
  std::string ssid;
  std::string bssid;
  double rssi_dbm = 0.0;
  double t = 0.0;

  friend bool operator==(const HotspotRecord&, const HotspotRecord&) = default;
};

struct ScanSnapshot {
  double t = 0.0;
  std::vector<HotspotRecord> records;

  IdSet Ids() const;
  const HotspotRecord* Find(std::string_view bssid) const;
  // Non-empty unique bssids, finite rssi, record times equal to t.
  void Validate() const;

  friend bool operator==(const ScanSnapshot&, const ScanSnapshot&) = default;
};

// Identifiers present in `a` and absent from `b`.
IdSet SnapshotDiff(const ScanSnapshot& a, const ScanSnapshot& b);

IdSet Intersect(const IdSet& a, const IdSet& b);
IdSet Subtract(const IdSet& a, const IdSet& b);

struct AbruptFilterParams {
  double delta_db_threshold = 20.0;
  int ramp_window = 3;            // scans
  double strong_floor_dbm = -70.0;
  double absent_floor_dbm = -100.0;  // level assigned to "not in the scan"

  void Validate() const;
};

struct FilterDecision {
  std::string bssid;
  bool keep = false;
  std::string reason;  // "abrupt", "gradual", "no transition" or "unseen"

  friend bool operator==(const FilterDecision&, const FilterDecision&) = default;
};

// An appearance or disappearance is abrupt when the jump from the absent
// floor is at least delta_db_threshold, or when the edge sample is at or
// above strong_floor_dbm with no weaker present sample within ramp_window
// scans on the absent side. The candidate is kept iff it has at least one
// such event and every event is abrupt.
FilterDecision AbruptFilter(std::span<const ScanSnapshot> history, const std::string& candidate,
                            const AbruptFilterParams& params = {});

class ScanSource {
 public:
  virtual ~ScanSource() = default;
  // nullopt when the source is exhausted.
  virtual std::optional<ScanSnapshot> Scan() = 0;
  virtual void Wait(double seconds) = 0;
  virtual double Now() const = 0;
  // Every snapshot observed so far, oldest first.
  virtual std::vector<ScanSnapshot> History() const = 0;
};

class CommandSink {
 public:
  virtual ~CommandSink() = default;
  virtual void Send(const Command& command) = 0;
  virtual void ClearRecords() = 0;
};

struct FeedbackParams {
  double window_s = 10.0;
  AbruptFilterParams filter;

  void Validate() const;
};

struct FeedbackOutcome {
  bool success = false;
  bool aborted = false;  // scan source ran out mid-round
  IdSet target_ids;
  std::optional<ScanSnapshot> l1, l2, l3, l4;
  IdSet dif1;        // L2 \ L3
  IdSet dif2;        // L4 \ L3
  IdSet candidates;  // dif1 & dif2
  IdSet filtered_ids;
  std::vector<FilterDecision> decisions;
  std::vector<Command> commands;
  std::string note;
};

FeedbackOutcome FeedbackRound(ScanSource& scanner, CommandSink& sink,
                              const FeedbackParams& params = {});

struct RestoreLog {
  bool performed = false;
  std::string reason;
  std::vector<std::string> actions;
};

// Sends Feedback2 and Reset, then clears records, when L4 \ L1 equals the
// target set. Throws PreconditionError unless outcome.success.
RestoreLog Restore(CommandSink& sink, const FeedbackOutcome& outcome, const ScanSnapshot& l1);

// Replays a recorded scan log. Scan() returns the first snapshot at or after
// the current time and moves the clock to it; Wait() advances the clock.
class LogReplaySource : public ScanSource {
 public:
  explicit LogReplaySource(std::vector<ScanSnapshot> snapshots);

  std::optional<ScanSnapshot> Scan() override;
  void Wait(double seconds) override;
  double Now() const override { return now_; }
  std::vector<ScanSnapshot> History() const override;

 private:
  std::vector<ScanSnapshot> snapshots_;
  double now_ = 0.0;
};

// Records everything it is asked to send.
class RecordingSink : public CommandSink {
 public:
  void Send(const Command& command) override { sent_.push_back(command); }
  void ClearRecords() override { ++clears_; }

  const std::vector<Command>& sent() const { return sent_; }
  int clears() const { return clears_; }

 private:
  std::vector<Command> sent_;
  int clears_ = 0;
};

// JSON lines, one {"t", "ssid", "bssid", "rssi"} object per record. Records
// with equal t form one snapshot; snapshots are returned in time order. A
// line with only "t" records a scan that saw no hotspots.
std::vector<ScanSnapshot> ParseScanLog(std::string_view text);
std::vector<ScanSnapshot> ReadScanLog(const std::filesystem::path& path);
std::string FormatScanLog(std::span<const ScanSnapshot> snapshots);

}  // namespace hushwave

#endif  // HUSHWAVE_FEEDBACK_H_
