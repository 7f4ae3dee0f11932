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

#include "delib/commands.hpp"

#include <algorithm>
#include <cmath>

#include "delib/error.hpp"
#include "delib/json_format.hpp"
#include "delib/metrics.hpp"
#include "delib/rng.hpp"

namespace delib {
namespace {

using nlohmann::json;

SortContext context_from_options(const json& options) {
  SortContext ctx = SortContext::at(options.value("now", std::int64_t{0}),
                                    options.value("seed", std::uint64_t{0}));
  if (options.contains("session_key") && !options.at("session_key").is_null()) {
    ctx.session_key = options.at("session_key").get<std::string>();
  }
  if (options.contains("viewer") && !options.at("viewer").is_null()) {
    ctx.viewer = options.at("viewer").get<std::string>();
  }
  return ctx;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string command_rank(const Dataset& dataset, const json& options) {
  const MethodSpec m = method_spec_from_json(options);
  const SortContext ctx = context_from_options(options);
  const ApprovalProfile profile = build_profile(dataset.events, dataset.proposals);
  const RankedList list =
      run_method(m, dataset.proposals, profile, dataset.views, dataset.events, ctx);
  return dump(ranked_list_to_json(list));
}

std::string command_compare(const Dataset& dataset, const json& options) {
  std::vector<std::string> names;
  if (!options.contains("methods")) fail_invalid("compare options missing 'methods'");
  if (options.at("methods").is_array()) {
    names = options.at("methods").get<std::vector<std::string>>();
  } else {
    std::string csv = options.at("methods").get<std::string>();
    std::string cur;
    for (char c : csv) {
      if (c == ',') {
        if (!cur.empty()) names.push_back(cur);
        cur.clear();
      } else if (c != ' ') {
        cur += c;
      }
    }
    if (!cur.empty()) names.push_back(cur);
  }
  if (names.empty()) fail_invalid("compare needs at least one method");
  if (!options.contains("k")) fail_invalid("compare options missing 'k'");
  const int k = options.at("k").get<int>();

  const int n = static_cast<int>(dataset.proposals.size());
  if (n > 0 && (k < 1 || k > n)) {
    fail_invalid("k must be in [1, " + std::to_string(n) + "]");
  }

  const AttentionModel attention =
      parse_attention(options.value("attention", std::string("geometric:0.7")));
  const SortContext base_ctx = context_from_options(options);
  const ApprovalProfile profile = build_profile(dataset.events, dataset.proposals);
  const bool disjoint = disjoint_groups(profile).has_value();

  json methods = json::array();
  for (const std::string& name : names) {
    json method_options = options;
    method_options["method"] = name;
    const MethodSpec m = method_spec_from_json(method_options);

    json entry;
    entry["method"] = name;
    if (n == 0) {
      entry["prefix"] = json::array();
      entry["coverage_at_k"] = nullptr;
      entry["first_hit"] = nullptr;
      entry["proportionality_deviation"] = nullptr;
      entry["attention_gini"] = nullptr;
      methods.push_back(std::move(entry));
      continue;
    }

    const RankedList list =
        run_method(m, dataset.proposals, profile, dataset.views, dataset.events, base_ctx);
    entry["prefix"] =
        std::vector<ProposalId>(list.order.begin(), list.order.begin() + k);
    entry["coverage_at_k"] = coverage_at_k(profile, list.order, k);

    const auto hits = first_hit_positions(profile, list.order);
    std::vector<std::int64_t> positions;
    for (const auto& [user, pos] : hits) {
      if (pos.has_value()) positions.push_back(*pos);
    }
    if (profile.user_count() == 0) {
      entry["first_hit"] = nullptr;
    } else {
      std::sort(positions.begin(), positions.end());
      auto percentile = [&](double q) -> json {
        if (positions.empty()) return nullptr;
        const std::size_t rank = static_cast<std::size_t>(
            std::ceil(q * static_cast<double>(positions.size())));
        return positions[std::max<std::size_t>(rank, 1) - 1];
      };
      json fh;
      fh["hit_rate"] =
          static_cast<double>(positions.size()) / static_cast<double>(profile.user_count());
      fh["p50"] = percentile(0.5);
      fh["p90"] = percentile(0.9);
      fh["worst"] = positions.empty() ? json(nullptr) : json(positions.back());
      entry["first_hit"] = std::move(fh);
    }

    entry["proportionality_deviation"] =
        disjoint ? json(proportionality_deviation(profile, list.order, k)) : json(nullptr);
    entry["attention_gini"] =
        json(attention_gini(attention_weights(n, attention)));
    methods.push_back(std::move(entry));
  }

  json report;
  report["k"] = k;
  report["attention"] = options.value("attention", std::string("geometric:0.7"));
  report["proposal_count"] = n;
  report["user_count"] = profile.user_count();
  report["methods"] = std::move(methods);
  return dump(report);
}

std::string command_simulate(const json& options) {
  if (!options.contains("scenario")) fail_invalid("simulate options missing 'scenario'");
  const Scenario scenario = load_scenario(options.at("scenario").get<std::string>());
  const std::uint64_t seed = options.value("seed", std::uint64_t{0});
  const int runs = options.value("runs", 1);
  if (runs < 1) fail_invalid("runs must be >= 1");
  const std::string experiment = options.value("experiment", std::string("none"));

  if (experiment == "feedback") {
    return dump(feedback_summary_to_json(experiment_feedback_loop(scenario, seed, runs)));
  }

  const MethodSpec m = method_spec_from_json(options);
  if (experiment == "timing") {
    return dump(timing_summary_to_json(experiment_timing(scenario, m, seed, runs), m));
  }
  if (experiment != "none") {
    fail_invalid("unknown experiment '" + experiment + "' (want none, timing or feedback)");
  }

  if (runs == 1) {
    return dump(sim_report_to_json(run_simulation(scenario, m, seed)));
  }
  json reports = json::array();
  for (int i = 0; i < runs; ++i) {
    reports.push_back(sim_report_to_json(
        run_simulation(scenario, m, derive_seed(seed, "run", static_cast<std::uint64_t>(i)))));
  }
  json j;
  j["runs"] = runs;
  j["reports"] = std::move(reports);
  return dump(j);
}

}  // namespace delib
