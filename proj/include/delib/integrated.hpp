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
// Approval evidence interpreted against metadata and content: Wilson-bound
// exposure adjustment, a minimum-inspection gate with an exploration
// interleave for under-inspected proposals, and tag/author diversification.

#ifndef DELIB_INTEGRATED_HPP
#define DELIB_INTEGRATED_HPP

#include <cstdint>
#include <vector>

#include "delib/holistic.hpp"
#include "delib/model.hpp"

namespace delib {

enum class IntegratedBase {
  ApprovalCount,  // rank inspected proposals by exposure-adjusted score
  SeqPav,
  SeqPhragmen,
  GreedyCoverage,
};

struct IntegratedConfig {
  std::int64_t min_views = 0;  // inspection gate threshold
  double z = 1.96;             // confidence width of the Wilson bound
  IntegratedBase base = IntegratedBase::ApprovalCount;
  int tag_window = 1;          // no repeated primary tag within this window
  int author_cap = 1000000;    // max proposals per author within the window

  void validate() const;
};

// Share of list positions handed to the under-inspected exploration
// stream: every ceil(1/share)-th slot.
inline constexpr double kExplorationShare = 0.25;

// Wilson lower confidence bound on the approval rate approvals/views.
// views below approvals is clamped up (with a data warning); 0 views
// yields 0. Rejects non-positive z.
double exposure_adjusted_score(std::int64_t approvals, std::int64_t views, double z);

// Greedy re-ordering: scan left to right, at each position placing the
// highest-ranked remaining proposal whose (a) primary tag does not repeat
// within the previous tag_window-1 output positions and (b) author stays
// within author_cap over that window; when nothing qualifies, constraint
// (a) is relaxed first, then (b). Stable among feasible candidates.
RankedList diversify(const RankedList& ranked, const std::vector<Proposal>& proposals,
                     int tag_window, int author_cap);

// The full pipeline: gate by min_views, rank the inspected stream by the
// base method (ApprovalCount uses the exposure-adjusted score), diversify,
// then interleave under-inspected proposals (fewest views first) into
// every fourth position.
RankedList integrated_rank(const ApprovalProfile& profile,
                           const std::vector<Proposal>& proposals,
                           const InspectionStats& inspections,
                           const IntegratedConfig& cfg, TieBreak tb,
                           const SortContext& ctx);

}  // namespace delib

#endif  // DELIB_INTEGRATED_HPP
