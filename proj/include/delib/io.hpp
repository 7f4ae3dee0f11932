// Copyright 2026 The delib Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// File ingestion. Proposals/events/views tables are CSV with a header or
// JSON-lines (detected by extension, then content). Scenario files are a
// flat key = value format; see docs in load_scenario.

#ifndef DELIB_IO_HPP
#define DELIB_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include "delib/model.hpp"
#include "delib/simulator.hpp"

namespace delib {

struct Dataset {
  std::vector<Proposal> proposals;
  std::vector<EvaluationEvent> events;
  InspectionStats views;
  bool has_views = false;
};

// Parse errors carry file, line, and column; referential-integrity errors
// name the dangling id.
Dataset load_dataset(const std::string& proposals_path, const std::string& events_path,
                     const std::optional<std::string>& views_path);

// Looks for proposals.{csv,jsonl}, events.{csv,jsonl} and an optional
// views.{csv,jsonl} inside dir.
Dataset load_dataset_dir(const std::string& dir);

// Flat key = value scenario file. Keys: n_users, groups
// ("size:pool:prob, ..."), arrivals ("all-at-start" | "uniform" |
// "burst:t1,t2"), horizon, sessions_per_tick, attention ("geometric:p" |
// "topk:k"), resort_every, ticks_per_day, report_k, preset ("s100").
Scenario load_scenario(const std::string& path);

AttentionModel parse_attention(const std::string& text);

}  // namespace delib

#endif  // DELIB_IO_HPP
