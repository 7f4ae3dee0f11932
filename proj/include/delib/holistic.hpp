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
// Whole-list ranking rules: a proposal's position depends on the set of
// proposals placed above it. Sequential PAV and sequential Phragmen build
// proportional lists; greedy coverage maximises, prefix by prefix, the
// number of users with an approved proposal high up. Score comparisons are
// exact (rational arithmetic); doubles serve only as a safe pre-filter, so
// tie-breaking is platform-independent.

#ifndef DELIB_HOLISTIC_HPP
#define DELIB_HOLISTIC_HPP

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "delib/model.hpp"
#include "delib/rational.hpp"

namespace delib {

enum class HolisticVariant {
  SeqPav,
  SeqPhragmen,
  GreedyCoverage,
};

struct HolisticMethod {
  HolisticVariant variant = HolisticVariant::SeqPav;
  TieBreak tiebreak = TieBreak::ById;
};

// Greedy: appends the proposal maximising the marginal
// sum over approvers u of 1 / (1 + k_u), where k_u counts already-placed
// proposals approved by u. Proposals nobody approves tie at marginal 0 and
// fall to tie-break order at the tail.
RankedList rank_seq_pav(const ApprovalProfile& profile,
                        const std::vector<Proposal>& proposals, TieBreak tb,
                        const SortContext& ctx);

// Greedy load balancing: each user carries a load (initially 0); placing p
// costs one unit spread so that all approvers of p end at equal load
//   l(p) = (1 + sum of approver loads) / |N(p)|,
// and the proposal with minimal l(p) is appended. Unapproved proposals
// follow after all approved ones, in tie-break order.
RankedList rank_seq_phragmen(const ApprovalProfile& profile,
                             const std::vector<Proposal>& proposals, TieBreak tb,
                             const SortContext& ctx);

// Greedy maximal coverage: appends the proposal covering the most not-yet-
// covered users (ties by total approvals, then tie-break). When everyone
// reachable is covered and reset_on_saturation is set, the covered set is
// cleared and the rule continues in layers; otherwise the remaining
// proposals follow in approval-count-then-tie-break order.
RankedList rank_greedy_coverage(const ApprovalProfile& profile,
                                const std::vector<Proposal>& proposals, TieBreak tb,
                                bool reset_on_saturation, const SortContext& ctx);

RankedList rank_holistic(const HolisticMethod& method, const ApprovalProfile& profile,
                         const std::vector<Proposal>& proposals, const SortContext& ctx,
                         bool coverage_reset_on_saturation = true);

// Exhaustive small-instance oracle for the coverage objective: the size-k
// subset maximising the number of users with at least one approved member,
// ties resolved toward the lexicographically first subset. Rejects
// instances beyond 20 proposals or effective k beyond 6.
std::pair<std::set<ProposalId>, std::int64_t> exact_coverage_prefix(
    const ApprovalProfile& profile, const std::vector<Proposal>& proposals, int k);

// Exact PAV objective of a prefix: sum over users of H(|A(u) ∩ prefix|)
// with H the harmonic numbers. Rejects prefixes containing duplicates.
BigRat pav_prefix_score(const ApprovalProfile& profile,
                        const std::vector<ProposalId>& prefix);

}  // namespace delib

#endif  // DELIB_HOLISTIC_HPP
