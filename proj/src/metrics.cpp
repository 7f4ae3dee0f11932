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

#include "delib/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "delib/error.hpp"

namespace delib {

AttentionModel AttentionModel::top_k_model(int k) {
  AttentionModel m;
  m.kind = Kind::TopK;
  m.top_k = k;
  m.validate();
  return m;
}

AttentionModel AttentionModel::geometric(double p) {
  AttentionModel m;
  m.kind = Kind::Geometric;
  m.decay = p;
  m.validate();
  return m;
}

void AttentionModel::validate() const {
  if (kind == Kind::TopK && top_k < 1) fail_invalid("attention top-k must be >= 1");
  if (kind == Kind::Geometric && !(decay > 0.0 && decay < 1.0)) {
    fail_invalid("attention decay must be in (0, 1)");
  }
}

double coverage_at_k(const ApprovalProfile& profile, const std::vector<ProposalId>& list,
                     int k) {
  if (k < 1 || static_cast<std::size_t>(k) > list.size()) {
    fail_invalid("coverage k out of range [1, list length]");
  }
  if (profile.user_count() == 0) return 0.0;

  std::set<UserId> covered;
  for (int i = 0; i < k; ++i) {
    auto it = profile.approvers().find(list[i]);
    if (it == profile.approvers().end()) continue;
    covered.insert(it->second.begin(), it->second.end());
  }
  return static_cast<double>(covered.size()) / static_cast<double>(profile.user_count());
}

std::map<UserId, std::optional<std::int64_t>> first_hit_positions(
    const ApprovalProfile& profile, const std::vector<ProposalId>& list) {
  std::map<ProposalId, std::int64_t> position;
  for (std::size_t i = 0; i < list.size(); ++i) {
    position.emplace(list[i], static_cast<std::int64_t>(i) + 1);
  }

  std::map<UserId, std::optional<std::int64_t>> hit;
  for (const UserId& u : profile.users()) hit[u] = std::nullopt;
  for (const auto& [u, ballot] : profile.approved_by_user()) {
    std::optional<std::int64_t> best;
    for (const ProposalId& p : ballot) {
      auto it = position.find(p);
      if (it != position.end() && (!best || it->second < *best)) best = it->second;
    }
    hit[u] = best;
  }
  return hit;
}

std::vector<double> attention_weights(int list_length, const AttentionModel& model) {
  if (list_length < 1) fail_invalid("attention weights need list length >= 1");
  model.validate();

  std::vector<double> w(list_length, 0.0);
  if (model.kind == AttentionModel::Kind::TopK) {
    const int covered = std::min(model.top_k, list_length);
    for (int i = 0; i < covered; ++i) w[i] = 1.0 / model.top_k;
  } else {
    double total = 0.0;
    double cur = 1.0;
    for (int i = 0; i < list_length; ++i) {
      w[i] = cur;
      total += cur;
      cur *= model.decay;
    }
    for (double& x : w) x /= total;
  }
  return w;
}

double attention_gini(const std::vector<double>& weights) {
  if (weights.empty()) fail_invalid("gini of empty weight vector");
  double total = 0.0;
  for (double w : weights) {
    if (w < 0.0) fail_invalid("gini weights must be non-negative");
    total += w;
  }
  if (total <= 0.0) fail_invalid("gini undefined for all-zero weights");

  std::vector<double> sorted = weights;
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  double weighted = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    weighted += static_cast<double>(i + 1) * sorted[i];
  }
  return 2.0 * weighted / (n * total) - (n + 1.0) / n;
}

std::optional<DisjointGroups> disjoint_groups(const ApprovalProfile& profile) {
  // Users with identical ballots form a group; the ballot is its pool.
  std::map<std::set<ProposalId>, std::vector<UserId>> by_ballot;
  for (const UserId& u : profile.users()) {
    auto it = profile.approved_by_user().find(u);
    if (it == profile.approved_by_user().end() || it->second.empty()) {
      return std::nullopt;  // a voter with no approvals fits no group
    }
    by_ballot[it->second].push_back(u);
  }

  DisjointGroups groups;
  std::set<ProposalId> claimed;
  for (auto& [pool, users] : by_ballot) {
    for (const ProposalId& p : pool) {
      if (!claimed.insert(p).second) return std::nullopt;  // pools overlap
    }
    groups.pools.push_back(pool);
    groups.members.push_back(std::move(users));
  }
  return groups;
}

double proportionality_deviation(const ApprovalProfile& profile,
                                 const std::vector<ProposalId>& list, int k) {
  if (k < 1 || static_cast<std::size_t>(k) > list.size()) {
    fail_invalid("proportionality k out of range [1, list length]");
  }
  auto groups = disjoint_groups(profile);
  if (!groups) {
    fail_invalid("proportionality deviation requires disjoint approval groups");
  }

  std::map<ProposalId, std::size_t> owner;
  for (std::size_t g = 0; g < groups->pools.size(); ++g) {
    for (const ProposalId& p : groups->pools[g]) owner[p] = g;
  }

  std::vector<std::int64_t> slots(groups->pools.size(), 0);
  std::int64_t unowned = 0;
  for (int i = 0; i < k; ++i) {
    auto it = owner.find(list[i]);
    if (it == owner.end()) {
      ++unowned;
    } else {
      ++slots[it->second];
    }
  }

  const double population = static_cast<double>(profile.user_count());
  double l1 = static_cast<double>(unowned) / k;
  for (std::size_t g = 0; g < slots.size(); ++g) {
    const double slot_share = static_cast<double>(slots[g]) / k;
    const double pop_share = static_cast<double>(groups->members[g].size()) / population;
    l1 += std::abs(slot_share - pop_share);
  }
  return l1 / 2.0;
}

std::optional<double> pearson_correlation(const std::vector<double>& x,
                                          const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) return std::nullopt;
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;

  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx <= 0.0 || syy <= 0.0) return std::nullopt;
  return sxy / std::sqrt(sxx * syy);
}

namespace {

// Average ranks with ties sharing the mean of their positions.
std::vector<double> fractional_ranks(const std::vector<double>& values) {
  std::vector<std::size_t> idx(values.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

  std::vector<double> ranks(values.size(), 0.0);
  std::size_t i = 0;
  while (i < idx.size()) {
    std::size_t j = i;
    while (j + 1 < idx.size() && values[idx[j + 1]] == values[idx[i]]) ++j;
    const double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t t = i; t <= j; ++t) ranks[idx[t]] = avg;
    i = j + 1;
  }
  return ranks;
}

}  // namespace

std::optional<double> spearman_correlation(const std::vector<double>& x,
                                           const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) return std::nullopt;
  return pearson_correlation(fractional_ranks(x), fractional_ranks(y));
}

}  // namespace delib
