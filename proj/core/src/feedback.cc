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

#include "hushwave/feedback.h"

#include <algorithm>
#include <cmath>
#include <iterator>

#include "hushwave/errors.h"

namespace hushwave {

std::string CommandKindName(CommandKind kind) {
  switch (kind) {
    case CommandKind::kMute:
      return "mute";
    case CommandKind::kAttack:
      return "attack";
    case CommandKind::kFeedback1:
      return "feedback1";
    case CommandKind::kFeedback2:
      return "feedback2";
    case CommandKind::kReset:
      return "reset";
  }
  return "unknown";
}

CommandKind ParseCommandKind(std::string_view name) {
  for (CommandKind k : kAllCommandKinds) {
    if (CommandKindName(k) == name) return k;
  }
  throw ParameterError("unknown command kind '" + std::string(name) + "'");
}

std::string DefaultPayload(CommandKind kind) {
  switch (kind) {
    case CommandKind::kMute:
      return "volume:6%";
    case CommandKind::kAttack:
      return "command:payload";
    case CommandKind::kFeedback1:
      return "hotspot:on";
    case CommandKind::kFeedback2:
      return "hotspot:off";
    case CommandKind::kReset:
      return "volume:restore";
  }
  return "";
}

Command MakeCommand(CommandKind kind) { return Command{kind, DefaultPayload(kind)}; }

IdSet ScanSnapshot::Ids() const {
  IdSet ids;
  for (const auto& r : records) ids.insert(r.bssid);
  return ids;
}

const HotspotRecord* ScanSnapshot::Find(std::string_view bssid) const {
  for (const auto& r : records) {
    if (r.bssid == bssid) return &r;
  }
  return nullptr;
}

void ScanSnapshot::Validate() const {
  if (!std::isfinite(t)) throw ParameterError("snapshot time must be finite");
  IdSet seen;
  for (const auto& r : records) {
    if (r.bssid.empty()) throw ParameterError("hotspot record has an empty bssid");
    if (!std::isfinite(r.rssi_dbm)) throw ParameterError("hotspot rssi must be finite");
    if (r.t != t) throw ParameterError("record time differs from snapshot time");
    if (!seen.insert(r.bssid).second) {
      throw ParameterError("bssid " + r.bssid + " repeated in one snapshot");
    }
  }
}

IdSet SnapshotDiff(const ScanSnapshot& a, const ScanSnapshot& b) {
  return Subtract(a.Ids(), b.Ids());
}

IdSet Intersect(const IdSet& a, const IdSet& b) {
  IdSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::inserter(out, out.end()));
  return out;
}

IdSet Subtract(const IdSet& a, const IdSet& b) {
  IdSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

void AbruptFilterParams::Validate() const {
  if (!(delta_db_threshold > 0.0)) throw ParameterError("delta_db_threshold must be > 0");
  if (ramp_window < 1) throw ParameterError("ramp_window must be >= 1");
  if (!std::isfinite(strong_floor_dbm) || !std::isfinite(absent_floor_dbm)) {
    throw ParameterError("filter floors must be finite");
  }
}

FilterDecision AbruptFilter(std::span<const ScanSnapshot> history, const std::string& candidate,
                            const AbruptFilterParams& params) {
  params.Validate();
  std::vector<std::optional<double>> series;
  series.reserve(history.size());
  bool seen = false;
  for (const auto& s : history) {
    const HotspotRecord* r = s.Find(candidate);
    if (r) {
      series.emplace_back(r->rssi_dbm);
      seen = true;
    } else {
      series.emplace_back(std::nullopt);
    }
  }
  if (!seen) return {candidate, false, "unseen"};

  const auto n = static_cast<long>(series.size());
  // Any present sample weaker than the strong floor in [lo, hi].
  const auto weak_present = [&](long lo, long hi) {
    for (long j = std::max(0L, lo); j <= std::min(n - 1, hi); ++j) {
      if (series[j] && *series[j] < params.strong_floor_dbm) return true;
    }
    return false;
  };

  int events = 0;
  bool all_abrupt = true;
  for (long i = 1; i < n; ++i) {
    const bool was = series[i - 1].has_value();
    const bool is = series[i].has_value();
    if (was == is) continue;
    ++events;
    const double edge = is ? *series[i] : *series[i - 1];
    const bool jump = std::abs(edge - params.absent_floor_dbm) >= params.delta_db_threshold;
    bool quiet_side;
    if (is) {
      // Appearance: absent side is before i.
      quiet_side = !weak_present(i - params.ramp_window, i - 1);
    } else {
      // Disappearance: absent side is from i on.
      quiet_side = !weak_present(i, i - 1 + params.ramp_window);
    }
    const bool strong = edge >= params.strong_floor_dbm && quiet_side;
    if (!(jump || strong)) all_abrupt = false;
  }
  if (events == 0) return {candidate, false, "no transition"};
  return all_abrupt ? FilterDecision{candidate, true, "abrupt"}
                    : FilterDecision{candidate, false, "gradual"};
}

void FeedbackParams::Validate() const {
  if (!(window_s >= 0.0) || !std::isfinite(window_s)) {
    throw ParameterError("feedback window must be finite and >= 0");
  }
  filter.Validate();
}

FeedbackOutcome FeedbackRound(ScanSource& scanner, CommandSink& sink,
                              const FeedbackParams& params) {
  params.Validate();
  FeedbackOutcome out;
  const auto send = [&](CommandKind kind) {
    const Command c = MakeCommand(kind);
    sink.Send(c);
    out.commands.push_back(c);
  };
  const auto abort = [&](const char* what) {
    out.aborted = true;
    out.note = std::string("scan source exhausted before ") + what;
    return out;
  };

  out.l1 = scanner.Scan();
  if (!out.l1) return abort("L1");

  send(CommandKind::kFeedback1);
  scanner.Wait(params.window_s);
  out.l2 = scanner.Scan();
  if (!out.l2) return abort("L2");

  send(CommandKind::kFeedback2);
  scanner.Wait(params.window_s);
  out.l3 = scanner.Scan();
  if (!out.l3) return abort("L3");

  out.dif1 = SnapshotDiff(*out.l2, *out.l3);
  if (out.l2->Ids() == out.l3->Ids()) {
    out.note = "no hotspot changed between L2 and L3";
    return out;
  }

  send(CommandKind::kFeedback1);
  scanner.Wait(params.window_s);
  out.l4 = scanner.Scan();
  if (!out.l4) return abort("L4");

  out.dif2 = SnapshotDiff(*out.l4, *out.l3);
  out.candidates = Intersect(out.dif1, out.dif2);
  const std::vector<ScanSnapshot> history = scanner.History();
  for (const std::string& id : out.candidates) {
    FilterDecision d = AbruptFilter(history, id, params.filter);
    if (d.keep) {
      out.target_ids.insert(id);
    } else {
      out.filtered_ids.insert(id);
    }
    out.decisions.push_back(std::move(d));
  }
  out.success = !out.target_ids.empty();
  out.note = out.success ? "target confirmed" : "no hotspot reappeared abruptly";
  return out;
}

RestoreLog Restore(CommandSink& sink, const FeedbackOutcome& outcome, const ScanSnapshot& l1) {
  if (!outcome.success || !outcome.l4) {
    throw PreconditionError("restore requires a successful feedback round");
  }
  RestoreLog log;
  if (SnapshotDiff(*outcome.l4, l1) != outcome.target_ids) {
    log.reason = "state mismatch";
    return log;
  }
  sink.Send(MakeCommand(CommandKind::kFeedback2));
  log.actions.push_back(CommandKindName(CommandKind::kFeedback2));
  sink.Send(MakeCommand(CommandKind::kReset));
  log.actions.push_back(CommandKindName(CommandKind::kReset));
  sink.ClearRecords();
  log.actions.push_back("clear_records");
  log.performed = true;
  log.reason = "restored";
  return log;
}

LogReplaySource::LogReplaySource(std::vector<ScanSnapshot> snapshots)
    : snapshots_(std::move(snapshots)) {
  for (std::size_t i = 0; i < snapshots_.size(); ++i) {
    snapshots_[i].Validate();
    if (i > 0 && !(snapshots_[i].t > snapshots_[i - 1].t)) {
      throw ParameterError("replayed snapshots must have strictly increasing times");
    }
  }
  if (!snapshots_.empty()) now_ = snapshots_.front().t;
}

std::optional<ScanSnapshot> LogReplaySource::Scan() {
  for (const auto& s : snapshots_) {
    if (s.t >= now_) {
      now_ = s.t;
      return s;
    }
  }
  return std::nullopt;
}

void LogReplaySource::Wait(double seconds) {
  if (!(seconds >= 0.0)) throw ParameterError("wait must be >= 0");
  now_ += seconds;
}

std::vector<ScanSnapshot> LogReplaySource::History() const {
  std::vector<ScanSnapshot> out;
  for (const auto& s : snapshots_) {
    if (s.t <= now_) out.push_back(s);
  }
  return out;
}

}  // namespace hushwave
