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

// Command-line front end. Everything goes through the shared library's C
// API; this file only parses flags, assembles the options JSON, and maps
// engine status codes onto exit codes (0 ok, 1 data/io error, 2 usage).

#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "delib/delib.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitDataError = 1;
constexpr int kExitUsage = 2;

int exit_code_of(delib_status status) {
  switch (status) {
    case DELIB_OK:
      return kExitOk;
    case DELIB_ERR_INVALID:
      return kExitUsage;
    default:
      return kExitDataError;
  }
}

int report_failure(delib_status status) {
  std::cerr << "delib: error (" << delib_status_name(status) << "): " << delib_last_error()
            << "\n";
  return exit_code_of(status);
}

int write_output(const char* text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "delib: error: cannot write '" << out_path << "'\n";
    return kExitDataError;
  }
  out << text;
  return kExitOk;
}

struct MethodFlags {
  std::string method;
  std::string tiebreak = "id";
  std::string date_order = "newest";
  std::string cost_order = "highest";
  double prior_approvals = 1.0;
  double prior_total = 2.0;
  double window_days = 3.0;
  std::string random_policy = "per-view";
  bool no_coverage_reset = false;
  std::int64_t min_views = 0;
  double z = 1.96;
  std::string base = "approvals";
  int tag_window = 1;
  int author_cap = 1000000;

  void add_to(CLI::App& app, bool method_required) {
    auto* opt = app.add_option("--method", method, "Sorting method");
    if (method_required) opt->required();
    app.add_option("--tiebreak", tiebreak, "Tie-break: id, oldest or newest");
    app.add_option("--date-order", date_order, "date: newest or oldest first");
    app.add_option("--cost-order", cost_order, "cost: highest or lowest first");
    app.add_option("--prior-approvals", prior_approvals, "ratio: pseudo-count of approvals");
    app.add_option("--prior-total", prior_total, "ratio: pseudo-count of total votes");
    app.add_option("--window-days", window_days, "active: activity window in days");
    app.add_option("--random-policy", random_policy,
                   "random: per-view, per-session or daily");
    app.add_flag("--no-coverage-reset", no_coverage_reset,
                 "coverage: disable layered coverage after saturation");
    app.add_option("--min-views", min_views, "integrated: inspection gate threshold");
    app.add_option("--z", z, "integrated: confidence width of the Wilson bound");
    app.add_option("--base", base,
                   "integrated: base method (approvals, seqpav, seqphragmen, coverage)");
    app.add_option("--tag-window", tag_window, "integrated: tag diversification window");
    app.add_option("--author-cap", author_cap, "integrated: author cap per window");
  }

  void fill(json& options) const {
    if (!method.empty()) options["method"] = method;
    options["tiebreak"] = tiebreak;
    options["newest_first"] = date_order != "oldest";
    options["highest_first"] = cost_order != "lowest";
    options["prior_approvals"] = prior_approvals;
    options["prior_total"] = prior_total;
    options["window_seconds"] = static_cast<std::int64_t>(window_days * 86400.0);
    options["random_policy"] = random_policy;
    options["coverage_reset"] = !no_coverage_reset;
    options["min_views"] = min_views;
    options["z"] = z;
    options["base"] = base;
    options["tag_window"] = tag_window;
    options["author_cap"] = author_cap;
  }
};

std::int64_t now_or_wallclock(const std::optional<std::int64_t>& now_flag) {
  if (now_flag.has_value()) return *now_flag;
  return static_cast<std::int64_t>(std::time(nullptr));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"delib - sorting engine and attention simulator for deliberation platforms"};
  app.require_subcommand(1);

  // --- rank ---------------------------------------------------------------
  auto* rank = app.add_subcommand("rank", "Rank a dataset with one method");
  MethodFlags rank_flags;
  std::string rank_input_dir;
  std::uint64_t rank_seed = 0;
  std::optional<std::int64_t> rank_now;
  std::string rank_session_key, rank_viewer, rank_out;
  rank->add_option("--input-dir", rank_input_dir, "Dataset directory")->required();
  rank_flags.add_to(*rank, true);
  rank->add_option("--seed", rank_seed, "Seed (PerView random uses it as the nonce)");
  rank->add_option("--now", rank_now, "Override wall clock (epoch seconds, UTC)");
  rank->add_option("--session-key", rank_session_key, "Session key for per-session random");
  rank->add_option("--viewer", rank_viewer, "Viewer user id (provenance only)");
  rank->add_option("--out", rank_out, "Output file (default stdout)");

  // --- compare ------------------------------------------------------------
  auto* compare = app.add_subcommand("compare", "Run several methods side by side");
  std::string cmp_methods, cmp_input_dir, cmp_attention = "geometric:0.7";
  std::string cmp_tiebreak = "id", cmp_session_key, cmp_out;
  int cmp_k = 0;
  std::uint64_t cmp_seed = 0;
  std::optional<std::int64_t> cmp_now;
  compare->add_option("--methods", cmp_methods, "Comma-separated method names")->required();
  compare->add_option("--k", cmp_k, "Prefix length for the report")->required();
  compare->add_option("--input-dir", cmp_input_dir, "Dataset directory")->required();
  compare->add_option("--attention", cmp_attention, "Attention model (geometric:p, topk:k)");
  compare->add_option("--tiebreak", cmp_tiebreak, "Tie-break: id, oldest or newest");
  compare->add_option("--seed", cmp_seed, "Seed for randomized methods");
  compare->add_option("--now", cmp_now, "Override wall clock (epoch seconds, UTC)");
  compare->add_option("--session-key", cmp_session_key, "Session key for per-session random");
  compare->add_option("--out", cmp_out, "Output file (default stdout)");

  // --- simulate -----------------------------------------------------------
  auto* simulate = app.add_subcommand("simulate", "Run the deliberation simulator");
  MethodFlags sim_flags;
  std::string sim_scenario, sim_experiment = "none", sim_out;
  std::uint64_t sim_seed = 0;
  int sim_runs = 1;
  simulate->add_option("--scenario", sim_scenario, "Scenario file")->required();
  sim_flags.add_to(*simulate, false);
  simulate->add_option("--seed", sim_seed, "Master seed");
  simulate->add_option("--runs", sim_runs, "Number of runs");
  simulate->add_option("--experiment", sim_experiment, "none, timing or feedback");
  simulate->add_option("--out", sim_out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  char* out_json = nullptr;
  delib_status status = DELIB_OK;
  std::string out_path;

  if (rank->parsed()) {
    delib_dataset* dataset = nullptr;
    status = delib_dataset_open_dir(rank_input_dir.c_str(), &dataset);
    if (status != DELIB_OK) return report_failure(status);

    json options;
    rank_flags.fill(options);
    options["seed"] = rank_seed;
    options["now"] = now_or_wallclock(rank_now);
    if (!rank_session_key.empty()) options["session_key"] = rank_session_key;
    if (!rank_viewer.empty()) options["viewer"] = rank_viewer;

    status = delib_rank(dataset, options.dump().c_str(), &out_json);
    delib_dataset_close(dataset);
    out_path = rank_out;
  } else if (compare->parsed()) {
    delib_dataset* dataset = nullptr;
    status = delib_dataset_open_dir(cmp_input_dir.c_str(), &dataset);
    if (status != DELIB_OK) return report_failure(status);

    json options;
    options["methods"] = cmp_methods;
    options["k"] = cmp_k;
    options["attention"] = cmp_attention;
    options["tiebreak"] = cmp_tiebreak;
    options["seed"] = cmp_seed;
    options["now"] = now_or_wallclock(cmp_now);
    if (!cmp_session_key.empty()) options["session_key"] = cmp_session_key;

    status = delib_compare(dataset, options.dump().c_str(), &out_json);
    delib_dataset_close(dataset);
    out_path = cmp_out;
  } else {
    json options;
    sim_flags.fill(options);
    options["scenario"] = sim_scenario;
    options["seed"] = sim_seed;
    options["runs"] = sim_runs;
    options["experiment"] = sim_experiment;
    if (sim_flags.method.empty() && sim_experiment != "feedback") {
      std::cerr << "delib: error: simulate requires --method unless --experiment feedback\n";
      return kExitUsage;
    }

    status = delib_simulate(options.dump().c_str(), &out_json);
    out_path = sim_out;
  }

  if (status != DELIB_OK) return report_failure(status);
  const int code = write_output(out_json, out_path);
  delib_buffer_free(out_json);
  return code;
}
