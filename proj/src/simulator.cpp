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

#include "delib/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <unordered_map>

#include "delib/error.hpp"
#include "delib/rng.hpp"

namespace delib {

void Scenario::validate() const {
  if (horizon < 1) fail_invalid("scenario horizon must be >= 1 tick");
  if (sessions_per_tick < 0) fail_invalid("sessions_per_tick must be non-negative");
  if (resort_every < 1) fail_invalid("resort_every must be >= 1");
  if (ticks_per_day < 1 || 86400 % ticks_per_day != 0) {
    fail_invalid("ticks_per_day must be >= 1 and divide 86400");
  }
  if (report_k < 1) fail_invalid("report_k must be >= 1");
  attention.validate();
  if (arrivals.kind == ArrivalKind::Burst) {
    if (arrivals.burst_ticks.empty()) fail_invalid("burst arrivals need at least one tick");
    for (std::int64_t t : arrivals.burst_ticks) {
      if (t < 0 || t >= horizon) fail_invalid("burst tick outside [0, horizon)");
    }
  }
  if (!preset_profile.empty() && preset_profile != "s100") {
    fail_invalid("unknown preset profile '" + preset_profile + "'");
  }
  if (preset_profile.empty()) {
    if (n_users < 1) fail_invalid("scenario needs at least one user");
    if (groups.empty()) fail_invalid("scenario needs at least one group");
    std::int64_t total = 0;
    std::int64_t pool = 0;
    for (const GroupSpec& g : groups) {
      if (g.size < 1) fail_invalid("group size must be >= 1");
      if (g.pool_size < 0) fail_invalid("group pool size must be non-negative");
      if (!(g.approval_prob >= 0.0 && g.approval_prob <= 1.0)) {
        fail_invalid("approval probability must be in [0, 1]");
      }
      total += g.size;
      pool += g.pool_size;
    }
    if (total != n_users) fail_invalid("group sizes must sum to n_users");
    if (static_cast<std::int64_t>(n_users) * std::max<std::int64_t>(pool, 1) > 500000000) {
      fail_invalid("scenario too large (users x proposals)");
    }
  }
}

namespace {

struct World {
  std::vector<UserId> user_ids;
  std::vector<int> group_of;            // per user index
  std::vector<double> group_prob;       // per group
  std::vector<Proposal> proposals;      // id-sorted
  std::vector<int> pool_group;          // per proposal index
  std::vector<std::int64_t> arrival;    // per proposal index (tick)
  std::vector<char> decided;            // (user, proposal) opinion revealed
  std::map<ProposalId, std::set<UserId>> approvers;
  std::vector<EvaluationEvent> events;

  bool decided_at(int u, int p) const {
    return decided[static_cast<std::size_t>(u) * proposals.size() + p] != 0;
  }
  void set_decided(int u, int p) {
    decided[static_cast<std::size_t>(u) * proposals.size() + p] = 1;
  }
};

std::string padded(const char* prefix, int value, int width) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%s%0*d", prefix, width, value);
  return buf;
}

World build_world(const Scenario& sc, std::uint64_t seed, std::int64_t tick_seconds) {
  World w;

  if (sc.preset_profile == "s100") {
    auto [proposals, profile] = scenario_s100();
    w.proposals = std::move(proposals);
    std::sort(w.proposals.begin(), w.proposals.end(),
              [](const Proposal& a, const Proposal& b) { return a.id < b.id; });
    w.user_ids = profile.users();
    w.group_prob = {1.0, 1.0, 1.0};
    w.group_of.resize(w.user_ids.size());
    for (std::size_t u = 0; u < w.user_ids.size(); ++u) {
      const char c = w.user_ids[u][1];  // uA.., uB.., uC..
      w.group_of[u] = c == 'A' ? 0 : (c == 'B' ? 1 : 2);
    }
    w.pool_group.resize(w.proposals.size());
    for (std::size_t p = 0; p < w.proposals.size(); ++p) {
      const char c = w.proposals[p].id[0];  // x.., y.., z..
      w.pool_group[p] = c == 'x' ? 0 : (c == 'y' ? 1 : 2);
    }
    w.arrival.assign(w.proposals.size(), 0);
    w.decided.assign(w.user_ids.size() * w.proposals.size(), 0);

    // Pre-seeded approvals: every in-pool opinion is already revealed.
    for (const auto& [pid, users] : profile.approvers()) w.approvers[pid] = users;
    for (std::size_t u = 0; u < w.user_ids.size(); ++u) {
      for (std::size_t p = 0; p < w.proposals.size(); ++p) {
        if (w.pool_group[p] == w.group_of[u]) w.set_decided(static_cast<int>(u), static_cast<int>(p));
      }
    }
    for (const auto& [pid, users] : w.approvers) {
      for (const UserId& u : users) {
        w.events.push_back(EvaluationEvent{u, pid, Polarity::Approve, 0});
      }
    }
    return w;
  }

  int user_width = 1;
  for (int v = sc.n_users - 1; v >= 10; v /= 10) ++user_width;
  user_width = std::max(user_width, 4);

  int next_user = 0;
  for (std::size_t g = 0; g < sc.groups.size(); ++g) {
    w.group_prob.push_back(sc.groups[g].approval_prob);
    for (int i = 0; i < sc.groups[g].size; ++i) {
      w.user_ids.push_back(padded("u", next_user++, user_width));
      w.group_of.push_back(static_cast<int>(g));
    }
    for (int j = 0; j < sc.groups[g].pool_size; ++j) {
      Proposal p;
      p.id = padded("g", static_cast<int>(g), 2) + padded("p", j, 4);
      p.title = "Proposal " + p.id;
      p.author = "author-" + p.id;
      w.proposals.push_back(std::move(p));
      w.pool_group.push_back(static_cast<int>(g));
    }
  }
  // Group-major ids are already byte-lexicographic.

  const std::size_t n_props = w.proposals.size();
  w.arrival.assign(n_props, 0);
  if (sc.arrivals.kind == ArrivalKind::UniformOverHorizon) {
    Rng arr(derive_seed(seed, "arrivals"));
    for (std::size_t p = 0; p < n_props; ++p) {
      w.arrival[p] = static_cast<std::int64_t>(arr.bounded(static_cast<std::uint64_t>(sc.horizon)));
    }
  } else if (sc.arrivals.kind == ArrivalKind::Burst) {
    for (std::size_t p = 0; p < n_props; ++p) {
      w.arrival[p] = sc.arrivals.burst_ticks[p % sc.arrivals.burst_ticks.size()];
    }
  }
  for (std::size_t p = 0; p < n_props; ++p) {
    w.proposals[p].submitted_at = w.arrival[p] * tick_seconds;
  }
  w.decided.assign(w.user_ids.size() * n_props, 0);
  return w;
}

bool latent_approves(std::uint64_t seed, int u, int p, double prob) {
  const std::uint64_t h = derive_seed(seed, "opinion", static_cast<std::uint64_t>(u),
                                      static_cast<std::uint64_t>(p));
  return static_cast<double>(h >> 11) * 0x1.0p-53 < prob;
}

}  // namespace

SimReport run_simulation(const Scenario& scenario, const MethodSpec& method,
                         std::uint64_t seed) {
  scenario.validate();
  method.validate();

  const std::int64_t tick_seconds = 86400 / scenario.ticks_per_day;
  World w = build_world(scenario, seed, tick_seconds);
  const int n_users = static_cast<int>(w.user_ids.size());
  const int n_props = static_cast<int>(w.proposals.size());

  std::unordered_map<std::string_view, int> prop_index;
  for (int p = 0; p < n_props; ++p) prop_index.emplace(w.proposals[p].id, p);

  std::vector<std::int64_t> views(n_props, 0);
  std::vector<std::int64_t> early(n_props, 0);
  const std::int64_t early_cut =
      std::max<std::int64_t>(1, (scenario.horizon + 9) / 10);  // first 10% of ticks

  SimReport report;
  report.seed = seed;
  report.ticks = scenario.horizon;
  report.inspections_per_tick.assign(scenario.horizon, 0);

  const bool randomized = is_random_method(method);

  // Snapshot taken at resort events; sessions between resorts see it.
  std::vector<Proposal> snap_proposals;
  ApprovalProfile snap_profile;
  InspectionStats snap_views;
  RankedList current_list;

  auto list_for_context = [&](const SortContext& ctx) {
    return run_method(method, snap_proposals, snap_profile, snap_views, w.events, ctx);
  };
  auto random_ctx = [&](std::int64_t now, std::uint64_t nonce, const std::string& session,
                        const std::optional<UserId>& viewer) {
    SortContext ctx = SortContext::at(
        now, method.random_policy == RandomPolicy::PerView ? nonce : seed);
    ctx.session_key = session;
    ctx.viewer = viewer;
    return ctx;
  };

  for (std::int64_t t = 0; t < scenario.horizon; ++t) {
    const std::int64_t now = t * tick_seconds;

    const bool resort = (t % scenario.resort_every == 0);
    if (resort) {
      snap_proposals.clear();
      for (int p = 0; p < n_props; ++p) {
        if (w.arrival[p] <= t) snap_proposals.push_back(w.proposals[p]);
      }
      snap_profile = ApprovalProfile::from_sets(w.approvers);
      snap_views.views.clear();
      for (int p = 0; p < n_props; ++p) {
        if (w.arrival[p] <= t) snap_views.views[w.proposals[p].id] = views[p];
      }
      if (!randomized) {
        current_list = list_for_context(SortContext::at(now, seed));
      }
    }

    Rng session_rng(derive_seed(seed, "sessions", static_cast<std::uint64_t>(t)));
    Rng attention_rng(derive_seed(seed, "attn", static_cast<std::uint64_t>(t)));

    for (int s = 0; s < scenario.sessions_per_tick; ++s) {
      const int u = static_cast<int>(session_rng.bounded(static_cast<std::uint64_t>(n_users)));

      RankedList session_list;
      const std::vector<ProposalId>* order = &current_list.order;
      if (randomized) {
        const std::uint64_t nonce =
            derive_seed(seed, "nonce", static_cast<std::uint64_t>(t),
                        static_cast<std::uint64_t>(s));
        session_list = list_for_context(
            random_ctx(now, nonce, "sess-" + w.user_ids[u], w.user_ids[u]));
        order = &session_list.order;
      }

      const int len = static_cast<int>(order->size());
      int inspect_limit = len;
      if (scenario.attention.kind == AttentionModel::Kind::TopK) {
        inspect_limit = std::min(scenario.attention.top_k, len);
      }
      double threshold = 1.0;
      for (int i = 0; i < inspect_limit; ++i) {
        if (scenario.attention.kind == AttentionModel::Kind::Geometric) {
          const double draw = attention_rng.next_double();
          const bool inspected = draw < threshold;
          threshold *= scenario.attention.decay;
          if (!inspected) continue;
        }
        const int p = prop_index.at((*order)[i]);
        ++views[p];
        if (t < early_cut) ++early[p];
        ++report.inspections_per_tick[t];

        if (!w.decided_at(u, p)) {
          w.set_decided(u, p);
          if (w.pool_group[p] == w.group_of[u] &&
              latent_approves(seed, u, p, w.group_prob[w.group_of[u]])) {
            w.approvers[w.proposals[p].id].insert(w.user_ids[u]);
            w.events.push_back(
                EvaluationEvent{w.user_ids[u], w.proposals[p].id, Polarity::Approve, now});
          }
        }
      }
    }

    if (resort) {
      // Series are recorded after the resort tick's sessions complete.
      const ApprovalProfile tick_profile = ApprovalProfile::from_sets(w.approvers);
      std::vector<ProposalId> series_order;
      if (randomized) {
        series_order = list_for_context(random_ctx(now,
                                                   derive_seed(seed, "series",
                                                               static_cast<std::uint64_t>(t)),
                                                   "series-sample", std::nullopt))
                           .order;
      } else {
        series_order = current_list.order;
      }

      std::optional<double> cov;
      if (!series_order.empty()) {
        const int k = std::min<int>(scenario.report_k, static_cast<int>(series_order.size()));
        cov = coverage_at_k(tick_profile, series_order, k);
      }
      report.coverage_series.push_back(cov);

      std::vector<double> alive_views;
      bool any = false;
      for (int p = 0; p < n_props; ++p) {
        if (w.arrival[p] > t) continue;
        alive_views.push_back(static_cast<double>(views[p]));
        any = any || views[p] > 0;
      }
      report.gini_series.push_back(
          any ? std::optional<double>(attention_gini(alive_views)) : std::nullopt);
    }
  }

  report.proposals = w.proposals;
  report.final_profile = ApprovalProfile::from_sets(w.approvers);
  for (int p = 0; p < n_props; ++p) {
    report.final_views.views[w.proposals[p].id] = views[p];
    report.arrival_ticks[w.proposals[p].id] = w.arrival[p];
    report.early_views[w.proposals[p].id] = early[p];
  }

  if (randomized) {
    report.final_list = list_for_context(random_ctx(
        (scenario.horizon - 1) * tick_seconds, derive_seed(seed, "final"),
        "final-sample", std::nullopt));
  } else {
    report.final_list = current_list;
  }

  // Placement score: list length - position, higher = closer to the top.
  const auto& final_order = report.final_list.order;
  std::vector<double> score, arrival_x, early_x;
  for (std::size_t i = 0; i < final_order.size(); ++i) {
    const int p = prop_index.at(final_order[i]);
    score.push_back(static_cast<double>(final_order.size() - i));
    arrival_x.push_back(static_cast<double>(w.arrival[p]));
    early_x.push_back(static_cast<double>(early[p]));
  }
  report.rank_vs_arrival_correlation = spearman_correlation(arrival_x, score);
  report.rank_vs_early_exposure_correlation = spearman_correlation(early_x, score);
  return report;
}

TimingSummary experiment_timing(const Scenario& scenario, const MethodSpec& method,
                                std::uint64_t seed, int n_runs) {
  if (scenario.arrivals.kind != ArrivalKind::UniformOverHorizon) {
    fail_invalid("timing experiment requires uniform-over-horizon arrivals");
  }
  if (n_runs < 1) fail_invalid("timing experiment needs at least one run");

  TimingSummary summary;
  summary.runs = n_runs;
  double sum_v = 0.0, sum_a = 0.0;
  int def_v = 0, def_a = 0;

  for (int i = 0; i < n_runs; ++i) {
    SimReport report =
        run_simulation(scenario, method, derive_seed(seed, "run", static_cast<std::uint64_t>(i)));
    std::vector<double> arrival, total_views, per_tick_alive;
    for (const auto& [pid, tick] : report.arrival_ticks) {
      const double v = static_cast<double>(report.final_views.of(pid));
      const double alive = static_cast<double>(std::max<std::int64_t>(1, scenario.horizon - tick));
      arrival.push_back(static_cast<double>(tick));
      total_views.push_back(v);
      per_tick_alive.push_back(v / alive);
    }
    auto cv = pearson_correlation(arrival, total_views);
    auto ca = pearson_correlation(arrival, per_tick_alive);
    summary.corr_views.push_back(cv);
    summary.corr_views_per_tick_alive.push_back(ca);
    if (cv) {
      sum_v += *cv;
      ++def_v;
    }
    if (ca) {
      sum_a += *ca;
      ++def_a;
    }
  }
  if (def_v > 0) summary.mean_corr_views = sum_v / def_v;
  if (def_a > 0) summary.mean_corr_views_per_tick_alive = sum_a / def_a;
  return summary;
}

MethodSpec feedback_integrated_method() {
  MethodSpec m;
  m.name = "integrated";
  m.integrated.base = IntegratedBase::ApprovalCount;
  m.integrated.min_views = 10;
  m.integrated.z = 1.96;
  m.integrated.tag_window = 1;
  m.integrated.author_cap = 1000000;
  return m;
}

FeedbackSummary experiment_feedback_loop(const Scenario& scenario, std::uint64_t seed,
                                         int n_runs) {
  if (n_runs < 1) fail_invalid("feedback experiment needs at least one run");
  if (scenario.preset_profile.empty()) {
    for (const GroupSpec& g : scenario.groups) {
      if (g.approval_prob != scenario.groups.front().approval_prob) {
        fail_invalid("feedback experiment requires equal approval probabilities");
      }
    }
  }

  MethodSpec raw;
  raw.name = "approvals";
  const MethodSpec integrated = feedback_integrated_method();

  FeedbackSummary summary;
  summary.runs = n_runs;
  double sum_raw = 0.0, sum_int = 0.0;
  int def_raw = 0, def_int = 0, greater = 0;

  for (int i = 0; i < n_runs; ++i) {
    const std::uint64_t run_seed = derive_seed(seed, "pair", static_cast<std::uint64_t>(i));
    const auto r_raw = run_simulation(scenario, raw, run_seed).rank_vs_early_exposure_correlation;
    const auto r_int =
        run_simulation(scenario, integrated, run_seed).rank_vs_early_exposure_correlation;
    summary.pairs.emplace_back(r_raw, r_int);
    if (r_raw) {
      sum_raw += *r_raw;
      ++def_raw;
    }
    if (r_int) {
      sum_int += *r_int;
      ++def_int;
    }
    if (r_raw && r_int) {
      ++summary.comparable_pairs;
      if (*r_raw > *r_int) ++greater;
    }
  }
  if (def_raw > 0) summary.raw_mean = sum_raw / def_raw;
  if (def_int > 0) summary.integrated_mean = sum_int / def_int;
  summary.raw_greater_fraction =
      summary.comparable_pairs > 0
          ? static_cast<double>(greater) / summary.comparable_pairs
          : 0.0;
  return summary;
}

}  // namespace delib
