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

#include "delib/holistic.hpp"

#include <algorithm>
#include <bit>
#include <cstddef>
#include <map>
#include <queue>

#include "delib/error.hpp"

namespace delib {
namespace {

// Double mirrors drift from the exact scores they track; every candidate
// within this relative band of the best mirror gets an exact comparison.
// Mirrors are refreshed from exact state every kRefreshInterval updates,
// keeping the accumulated drift orders of magnitude below the band.
constexpr double kFilterTol = 1e-7;
constexpr int kRefreshInterval = 64;

struct GreedyState {
  ProfileIndex idx;
  std::vector<std::int32_t> tie_rank;
  std::vector<char> placed;
  std::vector<ProposalId> order;

  GreedyState(const std::vector<Proposal>& proposals, const ApprovalProfile& profile,
              TieBreak tb)
      : idx(proposals, profile) {
    std::vector<const Proposal*> by_id;
    by_id.reserve(idx.proposal_count());
    for (int p = 0; p < idx.proposal_count(); ++p) by_id.push_back(&idx.proposal(p));
    tie_rank = tiebreak_ranks(by_id, tb);
    placed.assign(idx.proposal_count(), 0);
    order.reserve(idx.proposal_count());
  }

  void place(int p) {
    placed[p] = 1;
    order.push_back(idx.proposal_id(p));
  }

  // Remaining proposals in tie-break order.
  void append_tail_by_tiebreak() {
    std::vector<int> rest;
    for (int p = 0; p < idx.proposal_count(); ++p) {
      if (!placed[p]) rest.push_back(p);
    }
    std::sort(rest.begin(), rest.end(),
              [&](int a, int b) { return tie_rank[a] < tie_rank[b]; });
    for (int p : rest) place(p);
  }

  RankedList finish(std::string method, const SortContext& ctx) && {
    RankedList out;
    out.order = std::move(order);
    out.method = std::move(method);
    out.context = ctx;
    out.produced_at = ctx.now;
    return out;
  }
};

}  // namespace

RankedList rank_seq_pav(const ApprovalProfile& profile,
                        const std::vector<Proposal>& proposals, TieBreak tb,
                        const SortContext& ctx) {
  GreedyState st(proposals, profile, tb);
  const int n = st.idx.proposal_count();

  std::vector<std::int32_t> placed_count(st.idx.user_count(), 0);  // k_u
  std::vector<double> mirror(n);
  std::vector<std::int32_t> updates(n, 0);
  for (int p = 0; p < n; ++p) {
    mirror[p] = static_cast<double>(st.idx.approvers_of(p).size());
  }

  // Exact marginal of p given the current k_u, bucketed by denominator.
  auto exact_marginal = [&](int p) {
    std::map<std::int32_t, std::int64_t> buckets;
    for (std::int32_t u : st.idx.approvers_of(p)) ++buckets[placed_count[u] + 1];
    BigRat sum = 0;
    for (const auto& [den, count] : buckets) sum += make_rat(count, den);
    return sum;
  };

  for (int step = 0; step < n; ++step) {
    double best_mirror = -1.0;
    for (int p = 0; p < n; ++p) {
      if (!st.placed[p] && mirror[p] > best_mirror) best_mirror = mirror[p];
    }
    if (best_mirror <= 0.0) {
      // Only unapproved proposals remain; all marginals are exactly 0.
      st.append_tail_by_tiebreak();
      break;
    }

    const double tol = kFilterTol * (1.0 + best_mirror);
    int winner = -1;
    BigRat winner_score;
    for (int p = 0; p < n; ++p) {
      if (st.placed[p] || mirror[p] < best_mirror - tol) continue;
      BigRat score = exact_marginal(p);
      if (winner < 0 || score > winner_score ||
          (score == winner_score && st.tie_rank[p] < st.tie_rank[winner])) {
        winner = p;
        winner_score = std::move(score);
      }
    }

    st.place(winner);
    for (std::int32_t u : st.idx.approvers_of(winner)) {
      const std::int32_t k = placed_count[u]++;
      const double delta = 1.0 / (k + 2) - 1.0 / (k + 1);
      for (std::int32_t p : st.idx.approvals_of(u)) {
        if (st.placed[p]) continue;
        mirror[p] += delta;
        if (++updates[p] >= kRefreshInterval) {
          updates[p] = 0;
          double fresh = 0.0;
          for (std::int32_t v : st.idx.approvers_of(p)) fresh += 1.0 / (placed_count[v] + 1);
          mirror[p] = fresh;
        }
      }
    }
  }

  return std::move(st).finish("seqpav", ctx);
}

RankedList rank_seq_phragmen(const ApprovalProfile& profile,
                             const std::vector<Proposal>& proposals, TieBreak tb,
                             const SortContext& ctx) {
  GreedyState st(proposals, profile, tb);
  const int n = st.idx.proposal_count();
  const int m = st.idx.user_count();

  // Loads are assigned, not accumulated: every approver of the proposal
  // placed at step t ends at the same exact load. Store one exact value
  // per step and per-user step references; doubles mirror the load sums.
  std::vector<BigRat> step_load;
  std::vector<std::int32_t> last_step(m, -1);
  std::vector<double> load_mirror(m, 0.0);
  std::vector<double> load_sum(n, 0.0);  // sum of approver load mirrors
  std::vector<std::int32_t> updates(n, 0);

  auto exact_candidate_load = [&](int p) {
    BigRat sum = 1;
    for (std::int32_t u : st.idx.approvers_of(p)) {
      if (last_step[u] >= 0) sum += step_load[last_step[u]];
    }
    return BigRat(sum / make_rat(static_cast<std::int64_t>(st.idx.approvers_of(p).size()), 1));
  };

  int approved_remaining = 0;
  for (int p = 0; p < n; ++p) {
    if (!st.idx.approvers_of(p).empty()) ++approved_remaining;
  }

  while (approved_remaining > 0) {
    int best = -1;
    double best_mirror = 0.0;
    for (int p = 0; p < n; ++p) {
      if (st.placed[p] || st.idx.approvers_of(p).empty()) continue;
      const double cand = (1.0 + load_sum[p]) / static_cast<double>(st.idx.approvers_of(p).size());
      if (best < 0 || cand < best_mirror) {
        best_mirror = cand;
        best = p;
      }
    }

    const double tol = kFilterTol * (1.0 + best_mirror);
    int winner = -1;
    BigRat winner_load;
    for (int p = 0; p < n; ++p) {
      if (st.placed[p] || st.idx.approvers_of(p).empty()) continue;
      const double cand = (1.0 + load_sum[p]) / static_cast<double>(st.idx.approvers_of(p).size());
      if (cand > best_mirror + tol) continue;
      BigRat load = exact_candidate_load(p);
      if (winner < 0 || load < winner_load ||
          (load == winner_load && st.tie_rank[p] < st.tie_rank[winner])) {
        winner = p;
        winner_load = std::move(load);
      }
    }

    const std::int32_t t = static_cast<std::int32_t>(step_load.size());
    step_load.push_back(winner_load);
    const double new_mirror = rat_to_double(winner_load);
    st.place(winner);
    --approved_remaining;
    for (std::int32_t u : st.idx.approvers_of(winner)) {
      const double delta = new_mirror - load_mirror[u];
      load_mirror[u] = new_mirror;
      last_step[u] = t;
      for (std::int32_t p : st.idx.approvals_of(u)) {
        if (st.placed[p]) continue;
        load_sum[p] += delta;
        if (++updates[p] >= kRefreshInterval) {
          updates[p] = 0;
          double fresh = 0.0;
          for (std::int32_t v : st.idx.approvers_of(p)) fresh += load_mirror[v];
          load_sum[p] = fresh;
        }
      }
    }
  }

  st.append_tail_by_tiebreak();
  return std::move(st).finish("seqphragmen", ctx);
}

RankedList rank_greedy_coverage(const ApprovalProfile& profile,
                                const std::vector<Proposal>& proposals, TieBreak tb,
                                bool reset_on_saturation, const SortContext& ctx) {
  GreedyState st(proposals, profile, tb);
  const int n = st.idx.proposal_count();

  std::vector<char> covered(st.idx.user_count(), 0);
  int covered_count = 0;

  // Lazy greedy. Stale priorities are upper bounds (marginals only shrink
  // within a layer), so a popped entry whose recomputed marginal matches
  // its stale value is the true lexicographic maximum of
  // (marginal, |N(p)|, tie-break).
  struct Entry {
    std::int64_t marginal;
    std::int64_t approvals;
    std::int32_t tie_rank;
    int p;
    bool operator<(const Entry& o) const {
      if (marginal != o.marginal) return marginal < o.marginal;
      if (approvals != o.approvals) return approvals < o.approvals;
      return tie_rank > o.tie_rank;
    }
  };
  std::priority_queue<Entry> heap;

  auto rebuild_heap = [&]() {
    heap = {};
    for (int p = 0; p < n; ++p) {
      if (st.placed[p]) continue;
      const auto napp = static_cast<std::int64_t>(st.idx.approvers_of(p).size());
      heap.push(Entry{napp, napp, st.tie_rank[p], p});  // covered set is empty
    }
  };
  auto true_marginal = [&](int p) {
    std::int64_t gain = 0;
    for (std::int32_t u : st.idx.approvers_of(p)) gain += covered[u] ? 0 : 1;
    return gain;
  };

  rebuild_heap();
  while (!heap.empty()) {
    Entry top = heap.top();
    heap.pop();
    if (st.placed[top.p]) continue;
    const std::int64_t gain = true_marginal(top.p);
    if (gain != top.marginal) {
      top.marginal = gain;
      heap.push(top);
      continue;
    }
    if (gain == 0 && reset_on_saturation && covered_count > 0) {
      std::fill(covered.begin(), covered.end(), 0);
      covered_count = 0;
      rebuild_heap();
      continue;
    }
    st.place(top.p);
    for (std::int32_t u : st.idx.approvers_of(top.p)) {
      if (!covered[u]) {
        covered[u] = 1;
        ++covered_count;
      }
    }
  }

  return std::move(st).finish("coverage", ctx);
}

RankedList rank_holistic(const HolisticMethod& method, const ApprovalProfile& profile,
                         const std::vector<Proposal>& proposals, const SortContext& ctx,
                         bool coverage_reset_on_saturation) {
  switch (method.variant) {
    case HolisticVariant::SeqPav:
      return rank_seq_pav(profile, proposals, method.tiebreak, ctx);
    case HolisticVariant::SeqPhragmen:
      return rank_seq_phragmen(profile, proposals, method.tiebreak, ctx);
    case HolisticVariant::GreedyCoverage:
      return rank_greedy_coverage(profile, proposals, method.tiebreak,
                                  coverage_reset_on_saturation, ctx);
  }
  fail_invalid("unknown holistic variant");
}

std::pair<std::set<ProposalId>, std::int64_t> exact_coverage_prefix(
    const ApprovalProfile& profile, const std::vector<Proposal>& proposals, int k) {
  if (k < 0) fail_invalid("coverage prefix size must be non-negative");
  ProfileIndex idx(proposals, profile);
  const int n = idx.proposal_count();
  const int kk = std::min(k, n);
  if (n > 20 || kk > 6) {
    fail_invalid("exact coverage oracle limited to 20 proposals and prefix size 6");
  }
  if (kk == 0) return {{}, 0};

  const int words = (idx.user_count() + 63) / 64;
  std::vector<std::vector<std::uint64_t>> mask(n, std::vector<std::uint64_t>(words, 0));
  for (int p = 0; p < n; ++p) {
    for (std::int32_t u : idx.approvers_of(p)) {
      mask[p][u / 64] |= std::uint64_t{1} << (u % 64);
    }
  }

  std::vector<int> pick(kk), best_pick;
  std::int64_t best_value = -1;
  std::vector<std::vector<std::uint64_t>> unions(
      kk + 1, std::vector<std::uint64_t>(words, 0));

  // Depth-first over combinations in lexicographic index order; the first
  // maximiser encountered wins, making the returned set deterministic.
  auto recurse = [&](auto&& self, int depth, int from) -> void {
    if (depth == kk) {
      std::int64_t value = 0;
      for (std::uint64_t w : unions[kk]) value += std::popcount(w);
      if (value > best_value) {
        best_value = value;
        best_pick = pick;
      }
      return;
    }
    for (int p = from; p <= n - (kk - depth); ++p) {
      pick[depth] = p;
      for (int w = 0; w < words; ++w) unions[depth + 1][w] = unions[depth][w] | mask[p][w];
      self(self, depth + 1, p + 1);
    }
  };
  recurse(recurse, 0, 0);

  std::set<ProposalId> chosen;
  for (int p : best_pick) chosen.insert(idx.proposal_id(p));
  return {std::move(chosen), best_value};
}

BigRat pav_prefix_score(const ApprovalProfile& profile,
                        const std::vector<ProposalId>& prefix) {
  std::set<ProposalId> seen;
  for (const ProposalId& id : prefix) {
    if (!seen.insert(id).second) fail_invalid("duplicate proposal '" + id + "' in prefix");
  }

  std::map<UserId, std::int64_t> hits;
  for (const ProposalId& id : prefix) {
    auto it = profile.approvers().find(id);
    if (it == profile.approvers().end()) continue;
    for (const UserId& u : it->second) ++hits[u];
  }

  std::int64_t max_hits = 0;
  for (const auto& [u, h] : hits) max_hits = std::max(max_hits, h);
  std::vector<BigRat> harmonic(static_cast<std::size_t>(max_hits) + 1);
  harmonic[0] = 0;
  for (std::int64_t i = 1; i <= max_hits; ++i) {
    harmonic[i] = harmonic[i - 1] + make_rat(1, i);
  }

  BigRat total = 0;
  for (const auto& [u, h] : hits) total += harmonic[h];
  return total;
}

}  // namespace delib
