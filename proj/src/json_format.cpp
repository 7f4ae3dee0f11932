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

#include "delib/json_format.hpp"

#include "delib/error.hpp"

namespace delib {

using nlohmann::json;

std::string tiebreak_name(TieBreak tb) {
  switch (tb) {
    case TieBreak::ById:
      return "id";
    case TieBreak::OldestFirst:
      return "oldest";
    case TieBreak::NewestFirst:
      return "newest";
  }
  fail_invalid("unknown tiebreak");
}

TieBreak tiebreak_from_name(const std::string& name) {
  if (name == "id") return TieBreak::ById;
  if (name == "oldest") return TieBreak::OldestFirst;
  if (name == "newest") return TieBreak::NewestFirst;
  fail_invalid("unknown tiebreak '" + name + "' (want id, oldest or newest)");
}

std::string random_policy_name(RandomPolicy policy) {
  switch (policy) {
    case RandomPolicy::PerView:
      return "per-view";
    case RandomPolicy::PerSession:
      return "per-session";
    case RandomPolicy::DailyShared:
      return "daily";
  }
  fail_invalid("unknown random policy");
}

RandomPolicy random_policy_from_name(const std::string& name) {
  if (name == "per-view") return RandomPolicy::PerView;
  if (name == "per-session") return RandomPolicy::PerSession;
  if (name == "daily") return RandomPolicy::DailyShared;
  fail_invalid("unknown random policy '" + name + "' (want per-view, per-session or daily)");
}

std::string integrated_base_name(IntegratedBase base) {
  switch (base) {
    case IntegratedBase::ApprovalCount:
      return "approvals";
    case IntegratedBase::SeqPav:
      return "seqpav";
    case IntegratedBase::SeqPhragmen:
      return "seqphragmen";
    case IntegratedBase::GreedyCoverage:
      return "coverage";
  }
  fail_invalid("unknown integrated base");
}

IntegratedBase integrated_base_from_name(const std::string& name) {
  if (name == "approvals") return IntegratedBase::ApprovalCount;
  if (name == "seqpav") return IntegratedBase::SeqPav;
  if (name == "seqphragmen") return IntegratedBase::SeqPhragmen;
  if (name == "coverage") return IntegratedBase::GreedyCoverage;
  fail_invalid("unknown integrated base '" + name +
               "' (want approvals, seqpav, seqphragmen or coverage)");
}

namespace {

json opt_to_json(const std::optional<double>& v) {
  return v.has_value() ? json(*v) : json(nullptr);
}

template <typename T>
T field_or(const json& j, const char* name, T fallback) {
  if (!j.contains(name) || j.at(name).is_null()) return fallback;
  try {
    return j.at(name).get<T>();
  } catch (const json::exception&) {
    fail_invalid(std::string("invalid value for option '") + name + "'");
  }
}

}  // namespace

json sort_context_to_json(const SortContext& ctx) {
  json j;
  j["now"] = ctx.now;
  j["seed"] = ctx.seed;
  j["day_key"] = ctx.day_key;
  j["session_key"] = ctx.session_key.has_value() ? json(*ctx.session_key) : json(nullptr);
  j["viewer"] = ctx.viewer.has_value() ? json(*ctx.viewer) : json(nullptr);
  return j;
}

SortContext sort_context_from_json(const json& j) {
  SortContext ctx = SortContext::at(j.at("now").get<std::int64_t>(),
                                    j.at("seed").get<std::uint64_t>());
  if (j.contains("session_key") && !j.at("session_key").is_null()) {
    ctx.session_key = j.at("session_key").get<std::string>();
  }
  if (j.contains("viewer") && !j.at("viewer").is_null()) {
    ctx.viewer = j.at("viewer").get<std::string>();
  }
  if (j.contains("day_key")) ctx.day_key = j.at("day_key").get<std::string>();
  return ctx;
}

json ranked_list_to_json(const RankedList& list) {
  json j;
  j["order"] = list.order;
  j["method"] = list.method;
  j["seed"] = list.seed.has_value() ? json(*list.seed) : json(nullptr);
  j["context"] = sort_context_to_json(list.context);
  j["produced_at"] = list.produced_at;
  return j;
}

RankedList ranked_list_from_json(const json& j) {
  RankedList list;
  list.order = j.at("order").get<std::vector<ProposalId>>();
  list.method = j.at("method").get<std::string>();
  if (j.contains("seed") && !j.at("seed").is_null()) {
    list.seed = j.at("seed").get<std::uint64_t>();
  }
  list.context = sort_context_from_json(j.at("context"));
  list.produced_at = j.at("produced_at").get<std::int64_t>();
  return list;
}

json method_spec_to_json(const MethodSpec& m) {
  json j;
  j["method"] = m.name;
  j["tiebreak"] = tiebreak_name(m.tiebreak);
  j["newest_first"] = m.newest_first;
  j["highest_first"] = m.highest_first;
  j["prior_approvals"] = m.prior_approvals;
  j["prior_total"] = m.prior_total;
  j["window_seconds"] = m.window_seconds;
  j["random_policy"] = random_policy_name(m.random_policy);
  j["coverage_reset"] = m.coverage_reset;
  j["min_views"] = m.integrated.min_views;
  j["z"] = m.integrated.z;
  j["base"] = integrated_base_name(m.integrated.base);
  j["tag_window"] = m.integrated.tag_window;
  j["author_cap"] = m.integrated.author_cap;
  return j;
}

MethodSpec method_spec_from_json(const json& j) {
  MethodSpec m;
  if (!j.contains("method")) fail_invalid("options missing 'method'");
  m.name = j.at("method").get<std::string>();
  m.validate();
  m.tiebreak = tiebreak_from_name(field_or<std::string>(j, "tiebreak", "id"));
  m.newest_first = field_or<bool>(j, "newest_first", true);
  m.highest_first = field_or<bool>(j, "highest_first", true);
  m.prior_approvals = field_or<double>(j, "prior_approvals", 1.0);
  m.prior_total = field_or<double>(j, "prior_total", 2.0);
  m.window_seconds = field_or<std::int64_t>(j, "window_seconds", 3 * 86400);
  m.random_policy =
      random_policy_from_name(field_or<std::string>(j, "random_policy", "per-view"));
  m.coverage_reset = field_or<bool>(j, "coverage_reset", true);
  m.integrated.min_views = field_or<std::int64_t>(j, "min_views", 0);
  m.integrated.z = field_or<double>(j, "z", 1.96);
  m.integrated.base =
      integrated_base_from_name(field_or<std::string>(j, "base", "approvals"));
  m.integrated.tag_window = field_or<int>(j, "tag_window", 1);
  m.integrated.author_cap = field_or<int>(j, "author_cap", 1000000);
  return m;
}

json profile_to_json(const ApprovalProfile& profile) {
  json approvers = json::object();
  for (const auto& [pid, users] : profile.approvers()) {
    approvers[pid] = std::vector<UserId>(users.begin(), users.end());
  }
  json disapprovers = json::object();
  for (const auto& [pid, users] : profile.disapprovers()) {
    disapprovers[pid] = std::vector<UserId>(users.begin(), users.end());
  }
  json j;
  j["approvers"] = std::move(approvers);
  j["disapprovers"] = std::move(disapprovers);
  j["user_count"] = profile.user_count();
  return j;
}

json sim_report_to_json(const SimReport& report) {
  json j;
  j["seed"] = report.seed;
  j["ticks"] = report.ticks;
  j["proposal_count"] = report.proposals.size();
  j["final_list"] = ranked_list_to_json(report.final_list);
  j["final_profile"] = profile_to_json(report.final_profile);
  j["final_views"] = report.final_views.views;
  j["arrival_ticks"] = report.arrival_ticks;
  j["early_views"] = report.early_views;
  j["inspections_per_tick"] = report.inspections_per_tick;

  json coverage = json::array();
  for (const auto& v : report.coverage_series) coverage.push_back(opt_to_json(v));
  json gini = json::array();
  for (const auto& v : report.gini_series) gini.push_back(opt_to_json(v));
  j["coverage_series"] = std::move(coverage);
  j["gini_series"] = std::move(gini);

  j["rank_vs_arrival_correlation"] = opt_to_json(report.rank_vs_arrival_correlation);
  j["rank_vs_early_exposure_correlation"] =
      opt_to_json(report.rank_vs_early_exposure_correlation);
  return j;
}

json timing_summary_to_json(const TimingSummary& summary, const MethodSpec& m) {
  json j;
  j["experiment"] = "timing";
  j["method"] = method_spec_to_json(m);
  j["runs"] = summary.runs;
  json cv = json::array();
  for (const auto& v : summary.corr_views) cv.push_back(opt_to_json(v));
  json ca = json::array();
  for (const auto& v : summary.corr_views_per_tick_alive) ca.push_back(opt_to_json(v));
  j["corr_views"] = std::move(cv);
  j["corr_views_per_tick_alive"] = std::move(ca);
  j["mean_corr_views"] = opt_to_json(summary.mean_corr_views);
  j["mean_corr_views_per_tick_alive"] = opt_to_json(summary.mean_corr_views_per_tick_alive);
  return j;
}

json feedback_summary_to_json(const FeedbackSummary& summary) {
  json j;
  j["experiment"] = "feedback";
  j["runs"] = summary.runs;
  json pairs = json::array();
  for (const auto& [raw, integrated] : summary.pairs) {
    json pair;
    pair["raw"] = opt_to_json(raw);
    pair["integrated"] = opt_to_json(integrated);
    pairs.push_back(std::move(pair));
  }
  j["pairs"] = std::move(pairs);
  j["raw_mean"] = opt_to_json(summary.raw_mean);
  j["integrated_mean"] = opt_to_json(summary.integrated_mean);
  j["comparable_pairs"] = summary.comparable_pairs;
  j["raw_greater_fraction"] = summary.raw_greater_fraction;
  return j;
}

}  // namespace delib
