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
// Discrete-tick simulation of a deliberation phase. Users arrive in
// sessions, inspect list positions according to an attention model, and
// approve inspected proposals from their group's pool. Each user's opinion
// of each proposal is a latent Bernoulli draw fixed by (seed, user,
// proposal), revealed on first inspection, so approval outcomes are
// independent of inspection order whenever inspection is total.

#ifndef DELIB_SIMULATOR_HPP
#define DELIB_SIMULATOR_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "delib/method.hpp"
#include "delib/metrics.hpp"
#include "delib/model.hpp"

namespace delib {

struct GroupSpec {
  int size = 0;
  int pool_size = 0;
  double approval_prob = 0.0;
};

enum class ArrivalKind { AllAtStart, UniformOverHorizon, Burst };

struct ArrivalProcess {
  ArrivalKind kind = ArrivalKind::AllAtStart;
  std::vector<std::int64_t> burst_ticks;  // Burst: proposal j arrives at tick[j mod n]
};

struct Scenario {
  int n_users = 0;
  std::vector<GroupSpec> groups;
  ArrivalProcess arrivals;
  std::int64_t horizon = 1;        // ticks
  int sessions_per_tick = 20;
  AttentionModel attention;
  std::int64_t resort_every = 1;   // ticks between list recomputations
  std::int64_t ticks_per_day = 1;  // must divide 86400
  int report_k = 3;                // k for the coverage series
  std::string preset_profile;      // "" or "s100" (pre-seeded approvals)

  void validate() const;
};

struct SimReport {
  std::vector<Proposal> proposals;
  ApprovalProfile final_profile;
  InspectionStats final_views;
  RankedList final_list;

  // One entry per resort event; nullopt when the metric is undefined
  // (empty list, all-zero views).
  std::vector<std::optional<double>> coverage_series;
  std::vector<std::optional<double>> gini_series;

  std::map<ProposalId, std::int64_t> arrival_ticks;
  std::map<ProposalId, std::int64_t> early_views;  // first 10% of ticks
  std::vector<std::int64_t> inspections_per_tick;

  // Spearman correlations against the final placement score
  // (list length - position); nullopt on zero variance.
  std::optional<double> rank_vs_arrival_correlation;
  std::optional<double> rank_vs_early_exposure_correlation;

  std::uint64_t seed = 0;
  std::int64_t ticks = 0;
};

SimReport run_simulation(const Scenario& scenario, const MethodSpec& method,
                         std::uint64_t seed);

// Strategic-timing instrumentation: per run, the Pearson correlation of a
// proposal's arrival tick with its total views, and with its views per
// tick alive. Requires UniformOverHorizon arrivals.
struct TimingSummary {
  int runs = 0;
  std::vector<std::optional<double>> corr_views;
  std::vector<std::optional<double>> corr_views_per_tick_alive;
  std::optional<double> mean_corr_views;
  std::optional<double> mean_corr_views_per_tick_alive;
};
TimingSummary experiment_timing(const Scenario& scenario, const MethodSpec& method,
                                std::uint64_t seed, int n_runs);

// Feedback-loop instrumentation: identical seeds drive one run under raw
// approval sorting and one under integrated exposure-adjusted sorting;
// each arm reports Spearman(early views, final placement score). Requires
// equal approval probabilities across groups.
struct FeedbackSummary {
  int runs = 0;
  std::vector<std::pair<std::optional<double>, std::optional<double>>> pairs;  // raw, integrated
  std::optional<double> raw_mean;
  std::optional<double> integrated_mean;
  int comparable_pairs = 0;
  double raw_greater_fraction = 0.0;  // share of comparable pairs with raw > integrated
};
FeedbackSummary experiment_feedback_loop(const Scenario& scenario, std::uint64_t seed,
                                         int n_runs);

// The integrated arm used by the feedback experiment.
MethodSpec feedback_integrated_method();

}  // namespace delib

#endif  // DELIB_SIMULATOR_HPP
