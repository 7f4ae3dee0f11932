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

#include "delib/integrated.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <string>

#include "delib/error.hpp"

namespace delib {

void IntegratedConfig::validate() const {
  if (min_views < 0) fail_invalid("min_views must be non-negative");
  if (!(z > 0.0)) fail_invalid("confidence width z must be positive");
  if (tag_window < 1) fail_invalid("tag_window must be >= 1");
  if (author_cap < 1) fail_invalid("author_cap must be >= 1");
}

double exposure_adjusted_score(std::int64_t approvals, std::int64_t views, double z) {
  if (!(z > 0.0)) fail_invalid("confidence width z must be positive");
  if (approvals < 0 || views < 0) fail_invalid("approvals and views must be non-negative");
  if (approvals > views) {
    warn("views (" + std::to_string(views) + ") below approvals (" +
         std::to_string(approvals) + "); clamping views up");
    views = approvals;
  }
  if (views == 0) return 0.0;

  const double n = static_cast<double>(views);
  const double p_hat = static_cast<double>(approvals) / n;
  const double z2 = z * z;
  const double center = p_hat + z2 / (2.0 * n);
  const double spread = z * std::sqrt(p_hat * (1.0 - p_hat) / n + z2 / (4.0 * n * n));
  return (center - spread) / (1.0 + z2 / n);
}

namespace {

std::string primary_tag(const Proposal& p) {
  return p.tags.empty() ? std::string() : *p.tags.begin();
}

}  // namespace

RankedList diversify(const RankedList& ranked, const std::vector<Proposal>& proposals,
                     int tag_window, int author_cap) {
  if (tag_window < 1) fail_invalid("tag_window must be >= 1");
  if (author_cap < 1) fail_invalid("author_cap must be >= 1");

  std::map<ProposalId, const Proposal*> by_id;
  for (const Proposal& p : proposals) by_id[p.id] = &p;

  std::deque<const Proposal*> remaining;
  for (const ProposalId& id : ranked.order) {
    auto it = by_id.find(id);
    if (it == by_id.end()) fail_data("ranked list references unknown proposal '" + id + "'");
    remaining.push_back(it->second);
  }

  RankedList out = ranked;
  out.order.clear();
  std::vector<const Proposal*> window;  // the last tag_window-1 placements

  auto tag_ok = [&](const Proposal* p) {
    const std::string tag = primary_tag(*p);
    if (tag.empty()) return true;
    for (const Proposal* placed : window) {
      if (primary_tag(*placed) == tag) return false;
    }
    return true;
  };
  auto author_ok = [&](const Proposal* p) {
    int count = 0;
    for (const Proposal* placed : window) {
      if (placed->author == p->author) ++count;
    }
    return count < author_cap;
  };

  while (!remaining.empty()) {
    std::size_t pick = remaining.size();
    for (std::size_t i = 0; i < remaining.size(); ++i) {
      if (tag_ok(remaining[i]) && author_ok(remaining[i])) {
        pick = i;
        break;
      }
    }
    if (pick == remaining.size()) {  // relax the tag constraint
      for (std::size_t i = 0; i < remaining.size(); ++i) {
        if (author_ok(remaining[i])) {
          pick = i;
          break;
        }
      }
    }
    if (pick == remaining.size()) pick = 0;  // relax both

    const Proposal* chosen = remaining[pick];
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(pick));
    out.order.push_back(chosen->id);
    window.push_back(chosen);
    if (static_cast<int>(window.size()) > tag_window - 1) window.erase(window.begin());
  }
  return out;
}

RankedList integrated_rank(const ApprovalProfile& profile,
                           const std::vector<Proposal>& proposals,
                           const InspectionStats& inspections,
                           const IntegratedConfig& cfg, TieBreak tb,
                           const SortContext& ctx) {
  cfg.validate();
  auto by_id = sorted_by_id(proposals);
  const std::vector<std::int32_t> tie_rank = tiebreak_ranks(by_id, tb);

  std::vector<std::int32_t> inspected;
  std::vector<std::int32_t> under;
  for (std::size_t i = 0; i < by_id.size(); ++i) {
    if (inspections.of(by_id[i]->id) >= cfg.min_views) {
      inspected.push_back(static_cast<std::int32_t>(i));
    } else {
      under.push_back(static_cast<std::int32_t>(i));
    }
  }

  // Rank the inspected stream by the base method.
  std::vector<ProposalId> ranked_ids;
  std::vector<Proposal> inspected_proposals;
  inspected_proposals.reserve(inspected.size());
  for (std::int32_t i : inspected) inspected_proposals.push_back(*by_id[i]);

  if (cfg.base == IntegratedBase::ApprovalCount) {
    std::vector<std::int32_t> order = inspected;
    std::map<ProposalId, double> score;
    for (std::int32_t i : inspected) {
      score[by_id[i]->id] = exposure_adjusted_score(
          static_cast<std::int64_t>(profile.approval_count(by_id[i]->id)),
          inspections.of(by_id[i]->id), cfg.z);
    }
    std::sort(order.begin(), order.end(), [&](std::int32_t a, std::int32_t b) {
      const double sa = score[by_id[a]->id];
      const double sb = score[by_id[b]->id];
      if (sa != sb) return sa > sb;
      return tie_rank[a] < tie_rank[b];
    });
    for (std::int32_t i : order) ranked_ids.push_back(by_id[i]->id);
  } else {
    HolisticMethod method;
    method.tiebreak = tb;
    switch (cfg.base) {
      case IntegratedBase::SeqPav:
        method.variant = HolisticVariant::SeqPav;
        break;
      case IntegratedBase::SeqPhragmen:
        method.variant = HolisticVariant::SeqPhragmen;
        break;
      default:
        method.variant = HolisticVariant::GreedyCoverage;
        break;
    }
    ranked_ids = rank_holistic(method, profile, inspected_proposals, ctx).order;
  }

  RankedList ranked;
  ranked.order = std::move(ranked_ids);
  ranked.context = ctx;
  ranked.produced_at = ctx.now;
  ranked = diversify(ranked, proposals, cfg.tag_window, cfg.author_cap);

  // Exploration stream: fewest views first, then tie-break.
  std::sort(under.begin(), under.end(), [&](std::int32_t a, std::int32_t b) {
    const std::int64_t va = inspections.of(by_id[a]->id);
    const std::int64_t vb = inspections.of(by_id[b]->id);
    if (va != vb) return va < vb;
    return tie_rank[a] < tie_rank[b];
  });

  const int slot_period = static_cast<int>(std::ceil(1.0 / kExplorationShare));
  RankedList out;
  out.method = "integrated";
  out.context = ctx;
  out.produced_at = ctx.now;
  out.order.reserve(by_id.size());
  std::size_t ri = 0, ui = 0;
  for (int pos = 1; ri < ranked.order.size() || ui < under.size(); ++pos) {
    const bool exploration_slot = (pos % slot_period == 0);
    if (ri >= ranked.order.size() || (exploration_slot && ui < under.size())) {
      out.order.push_back(by_id[under[ui++]]->id);
    } else {
      out.order.push_back(ranked.order[ri++]);
    }
  }
  return out;
}

}  // namespace delib
