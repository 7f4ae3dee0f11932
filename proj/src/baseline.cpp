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

#include "delib/baseline.hpp"

#include <algorithm>
#include <map>

#include "delib/error.hpp"
#include "delib/rng.hpp"

namespace delib {
namespace {

RankedList finish(const std::vector<const Proposal*>& by_id,
                  const std::vector<std::int32_t>& perm, std::string method,
                  const SortContext& ctx, std::optional<std::uint64_t> seed = {}) {
  RankedList out;
  out.order.reserve(by_id.size());
  for (std::int32_t i : perm) out.order.push_back(by_id[i]->id);
  out.method = std::move(method);
  out.seed = seed;
  out.context = ctx;
  out.produced_at = ctx.now;
  return out;
}

// Descending primary key; equal keys resolved by tie-break rank. The rank
// is a total order, so the comparator is strict-weak and the result is
// independent of std::sort internals.
template <typename Key>
RankedList order_by_key_desc(const std::vector<const Proposal*>& by_id,
                             const std::vector<Key>& key, TieBreak tb,
                             std::string method, const SortContext& ctx) {
  const std::vector<std::int32_t> rank = tiebreak_ranks(by_id, tb);
  std::vector<std::int32_t> perm(by_id.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<std::int32_t>(i);
  std::sort(perm.begin(), perm.end(), [&](std::int32_t a, std::int32_t b) {
    if (key[a] != key[b]) return key[a] > key[b];
    return rank[a] < rank[b];
  });
  return finish(by_id, perm, std::move(method), ctx);
}

}  // namespace

RankedList sort_by_date(const std::vector<Proposal>& proposals, bool newest_first,
                        TieBreak tb, const SortContext& ctx) {
  auto by_id = sorted_by_id(proposals);
  std::vector<std::int64_t> key(by_id.size());
  for (std::size_t i = 0; i < by_id.size(); ++i) {
    key[i] = newest_first ? by_id[i]->submitted_at : -by_id[i]->submitted_at;
  }
  return order_by_key_desc(by_id, key, tb, "date", ctx);
}

RankedList sort_by_approvals(const ApprovalProfile& profile,
                             const std::vector<Proposal>& proposals, TieBreak tb,
                             const SortContext& ctx) {
  auto by_id = sorted_by_id(proposals);
  std::vector<std::int64_t> key(by_id.size());
  for (std::size_t i = 0; i < by_id.size(); ++i) {
    key[i] = static_cast<std::int64_t>(profile.approval_count(by_id[i]->id));
  }
  return order_by_key_desc(by_id, key, tb, "approvals", ctx);
}

RankedList sort_by_ratio(const ApprovalProfile& profile,
                         const std::vector<Proposal>& proposals,
                         double prior_approvals, double prior_total, TieBreak tb,
                         const SortContext& ctx) {
  if (!(prior_total > 0)) fail_invalid("ratio prior_total must be positive");
  if (!(prior_approvals >= 0) || prior_approvals > prior_total) {
    fail_invalid("ratio prior_approvals must satisfy 0 <= prior_approvals <= prior_total");
  }
  auto by_id = sorted_by_id(proposals);
  std::vector<double> key(by_id.size());
  for (std::size_t i = 0; i < by_id.size(); ++i) {
    const double a = static_cast<double>(profile.approval_count(by_id[i]->id));
    const double d = static_cast<double>(profile.disapproval_count(by_id[i]->id));
    key[i] = (a + prior_approvals) / (a + d + prior_total);
  }
  return order_by_key_desc(by_id, key, tb, "ratio", ctx);
}

RankedList sort_most_active(const std::vector<EvaluationEvent>& events,
                            const std::vector<Proposal>& proposals,
                            std::int64_t window_seconds, TieBreak tb,
                            const SortContext& ctx) {
  if (window_seconds <= 0) fail_invalid("activity window must be positive");
  std::map<ProposalId, std::int64_t> counts;
  for (const EvaluationEvent& e : events) {
    if (e.polarity != Polarity::Approve) continue;
    if (e.at > ctx.now - window_seconds && e.at <= ctx.now) ++counts[e.proposal];
  }
  auto by_id = sorted_by_id(proposals);
  std::vector<std::int64_t> key(by_id.size());
  for (std::size_t i = 0; i < by_id.size(); ++i) {
    auto it = counts.find(by_id[i]->id);
    key[i] = it == counts.end() ? 0 : it->second;
  }
  return order_by_key_desc(by_id, key, tb, "active", ctx);
}

RankedList sort_by_cost(const std::vector<Proposal>& proposals, bool highest_first,
                        TieBreak tb, const SortContext& ctx) {
  auto by_id = sorted_by_id(proposals);
  const std::vector<std::int32_t> rank = tiebreak_ranks(by_id, tb);
  std::vector<std::int32_t> perm(by_id.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<std::int32_t>(i);
  std::sort(perm.begin(), perm.end(), [&](std::int32_t a, std::int32_t b) {
    const auto& ca = by_id[a]->cost;
    const auto& cb = by_id[b]->cost;
    if (ca.has_value() != cb.has_value()) return ca.has_value();  // costless last
    if (ca.has_value() && *ca != *cb) return highest_first ? *ca > *cb : *ca < *cb;
    return rank[a] < rank[b];
  });
  return finish(by_id, perm, "cost", ctx);
}

RankedList sort_by_comments(const std::vector<Proposal>& proposals, TieBreak tb,
                            const SortContext& ctx) {
  auto by_id = sorted_by_id(proposals);
  std::vector<std::int64_t> key(by_id.size());
  for (std::size_t i = 0; i < by_id.size(); ++i) key[i] = by_id[i]->comment_count;
  return order_by_key_desc(by_id, key, tb, "comments", ctx);
}

RankedList random_order(const std::vector<Proposal>& proposals, RandomPolicy policy,
                        const SortContext& ctx) {
  std::uint64_t derived = 0;
  switch (policy) {
    case RandomPolicy::PerView:
      derived = ctx.seed;
      break;
    case RandomPolicy::PerSession:
      if (!ctx.session_key.has_value() || ctx.session_key->empty()) {
        fail_invalid("random per-session requires a session key");
      }
      derived = derive_seed(ctx.seed, *ctx.session_key);
      break;
    case RandomPolicy::DailyShared:
      derived = derive_seed(ctx.seed, ctx.day_key);
      break;
  }

  auto by_id = sorted_by_id(proposals);
  std::vector<std::int32_t> perm(by_id.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<std::int32_t>(i);
  Rng rng(derived);
  shuffle(perm, rng);
  return finish(by_id, perm, "random", ctx, derived);
}

}  // namespace delib
