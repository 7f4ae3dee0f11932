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

#include "delib/method.hpp"

#include <algorithm>

#include "delib/error.hpp"
#include "delib/holistic.hpp"

namespace delib {

const std::vector<std::string>& method_names() {
  static const std::vector<std::string> names = {
      "date",     "approvals", "ratio",       "active",   "cost",      "comments",
      "random",   "seqpav",    "seqphragmen", "coverage", "integrated"};
  return names;
}

void MethodSpec::validate() const {
  const auto& names = method_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) {
    std::string valid;
    for (const std::string& n : names) {
      if (!valid.empty()) valid += ", ";
      valid += n;
    }
    fail_invalid("unknown method '" + name + "'; valid methods: " + valid);
  }
}

RankedList run_method(const MethodSpec& m, const std::vector<Proposal>& proposals,
                      const ApprovalProfile& profile, const InspectionStats& views,
                      const std::vector<EvaluationEvent>& events, const SortContext& ctx) {
  m.validate();
  if (m.name == "date") return sort_by_date(proposals, m.newest_first, m.tiebreak, ctx);
  if (m.name == "approvals") return sort_by_approvals(profile, proposals, m.tiebreak, ctx);
  if (m.name == "ratio") {
    return sort_by_ratio(profile, proposals, m.prior_approvals, m.prior_total, m.tiebreak,
                         ctx);
  }
  if (m.name == "active") {
    return sort_most_active(events, proposals, m.window_seconds, m.tiebreak, ctx);
  }
  if (m.name == "cost") return sort_by_cost(proposals, m.highest_first, m.tiebreak, ctx);
  if (m.name == "comments") return sort_by_comments(proposals, m.tiebreak, ctx);
  if (m.name == "random") return random_order(proposals, m.random_policy, ctx);
  if (m.name == "seqpav") return rank_seq_pav(profile, proposals, m.tiebreak, ctx);
  if (m.name == "seqphragmen") {
    return rank_seq_phragmen(profile, proposals, m.tiebreak, ctx);
  }
  if (m.name == "coverage") {
    return rank_greedy_coverage(profile, proposals, m.tiebreak, m.coverage_reset, ctx);
  }
  return integrated_rank(profile, proposals, views, m.integrated, m.tiebreak, ctx);
}

}  // namespace delib
