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
// Measurements over ranked lists: user coverage, first-hit positions,
// position-attention weights, concentration (Gini), and proportionality
// deviation on disjoint-group profiles.

#ifndef DELIB_METRICS_HPP
#define DELIB_METRICS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "delib/model.hpp"

namespace delib {

// Where attention goes by position: either the first k positions equally,
// or geometric decay (position i inspected with probability decay^(i-1)).
struct AttentionModel {
  enum class Kind { TopK, Geometric };

  Kind kind = Kind::Geometric;
  int top_k = 3;
  double decay = 0.7;

  static AttentionModel top_k_model(int k);
  static AttentionModel geometric(double p);
  void validate() const;
};

// Fraction of profile users with at least one approved proposal among the
// first k positions. Requires 1 <= k <= |list|; 0.0 for a userless profile.
double coverage_at_k(const ApprovalProfile& profile, const std::vector<ProposalId>& list,
                     int k);

// 1-based position of the first approved proposal per user; nullopt when
// none of the user's approved proposals is listed.
std::map<UserId, std::optional<std::int64_t>> first_hit_positions(
    const ApprovalProfile& profile, const std::vector<ProposalId>& list);

// TopK: 1/k mass on each of the first min(k, n) positions (k > n leaves
// residual mass beyond the list). Geometric: decay^(i-1), normalised.
std::vector<double> attention_weights(int list_length, const AttentionModel& model);

// Gini coefficient of a non-negative weight distribution; rejects
// all-zero input.
double attention_gini(const std::vector<double>& weights);

// Users grouped by identical approval ballots, valid only when ballots are
// pairwise equal-or-disjoint and every user approves something.
struct DisjointGroups {
  std::vector<std::vector<UserId>> members;
  std::vector<std::set<ProposalId>> pools;
};
std::optional<DisjointGroups> disjoint_groups(const ApprovalProfile& profile);

// Half L1 distance between group shares of the top-k slots and group
// shares of the population. Slots held by proposals outside every group
// pool count toward the distance. Rejects non-disjoint profiles.
double proportionality_deviation(const ApprovalProfile& profile,
                                 const std::vector<ProposalId>& list, int k);

// Correlation helpers used by the simulator's instrumentation; nullopt
// when fewer than two points or a zero-variance variable.
std::optional<double> pearson_correlation(const std::vector<double>& x,
                                          const std::vector<double>& y);
std::optional<double> spearman_correlation(const std::vector<double>& x,
                                           const std::vector<double>& y);

}  // namespace delib

#endif  // DELIB_METRICS_HPP
