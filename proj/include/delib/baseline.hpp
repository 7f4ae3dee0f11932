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
// Single-parameter sorters: date, approvals, smoothed approval ratio,
// windowed activity, cost, comment count, and the three seeded
// randomization contracts. All are pure functions of their arguments;
// produced_at and the activity window anchor come from the SortContext.

#ifndef DELIB_BASELINE_HPP
#define DELIB_BASELINE_HPP

#include <cstdint>
#include <vector>

#include "delib/model.hpp"

namespace delib {

enum class RandomPolicy {
  PerView,      // a fresh order per view; caller supplies a nonce in ctx.seed
  PerSession,   // stable per ctx.session_key
  DailyShared,  // one shared order per UTC day
};

RankedList sort_by_date(const std::vector<Proposal>& proposals, bool newest_first,
                        TieBreak tb, const SortContext& ctx);

RankedList sort_by_approvals(const ApprovalProfile& profile,
                             const std::vector<Proposal>& proposals, TieBreak tb,
                             const SortContext& ctx);

// Smoothed ratio (|approvers| + prior_approvals) /
// (|approvers| + |disapprovers| + prior_total). Requires prior_total > 0
// and 0 <= prior_approvals <= prior_total; strictly monotone in approvals
// when prior_approvals < prior_total.
RankedList sort_by_ratio(const ApprovalProfile& profile,
                         const std::vector<Proposal>& proposals,
                         double prior_approvals, double prior_total, TieBreak tb,
                         const SortContext& ctx);

// Counts approval events with timestamp in (ctx.now - window, ctx.now].
// Retracted approvals still count while their event is inside the window.
RankedList sort_most_active(const std::vector<EvaluationEvent>& events,
                            const std::vector<Proposal>& proposals,
                            std::int64_t window_seconds, TieBreak tb,
                            const SortContext& ctx);

// Proposals without a cost sort after all costed proposals in either
// direction, in tie-break order.
RankedList sort_by_cost(const std::vector<Proposal>& proposals, bool highest_first,
                        TieBreak tb, const SortContext& ctx);

RankedList sort_by_comments(const std::vector<Proposal>& proposals, TieBreak tb,
                            const SortContext& ctx);

// Uniform permutation fixed entirely by a derived seed:
//   PerView      -> ctx.seed itself (caller supplies a fresh nonce)
//   PerSession   -> hash(ctx.session_key, ctx.seed)
//   DailyShared  -> hash(ctx.day_key, ctx.seed)
// Identical derived seed implies an identical permutation. The derived
// seed is recorded in RankedList::seed.
RankedList random_order(const std::vector<Proposal>& proposals, RandomPolicy policy,
                        const SortContext& ctx);

}  // namespace delib

#endif  // DELIB_BASELINE_HPP
