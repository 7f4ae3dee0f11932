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
// JSON wire formats. nlohmann::json keeps object keys sorted, so equal
// values serialize byte-identically.

#ifndef DELIB_JSON_FORMAT_HPP
#define DELIB_JSON_FORMAT_HPP

#include <string>

#include <json.hpp>

#include "delib/method.hpp"
#include "delib/model.hpp"
#include "delib/simulator.hpp"

namespace delib {

std::string tiebreak_name(TieBreak tb);
TieBreak tiebreak_from_name(const std::string& name);

std::string random_policy_name(RandomPolicy policy);
RandomPolicy random_policy_from_name(const std::string& name);

std::string integrated_base_name(IntegratedBase base);
IntegratedBase integrated_base_from_name(const std::string& name);

nlohmann::json sort_context_to_json(const SortContext& ctx);
SortContext sort_context_from_json(const nlohmann::json& j);

nlohmann::json ranked_list_to_json(const RankedList& list);
RankedList ranked_list_from_json(const nlohmann::json& j);

nlohmann::json method_spec_to_json(const MethodSpec& m);
// Accepts the flat options object used by the C API and the CLI; only
// "method" is required, everything else falls back to defaults.
MethodSpec method_spec_from_json(const nlohmann::json& j);

nlohmann::json profile_to_json(const ApprovalProfile& profile);
nlohmann::json sim_report_to_json(const SimReport& report);
nlohmann::json timing_summary_to_json(const TimingSummary& summary, const MethodSpec& m);
nlohmann::json feedback_summary_to_json(const FeedbackSummary& summary);

}  // namespace delib

#endif  // DELIB_JSON_FORMAT_HPP
