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

#include "delib/model.hpp"

#include <algorithm>
#include <cstdio>
#include <unordered_map>

#include "delib/error.hpp"

namespace delib {

ApprovalProfile ApprovalProfile::from_sets(std::map<ProposalId, std::set<UserId>> approvers,
                                           std::map<ProposalId, std::set<UserId>> disapprovers) {
  ApprovalProfile profile;
  std::erase_if(approvers, [](const auto& kv) { return kv.second.empty(); });
  std::erase_if(disapprovers, [](const auto& kv) { return kv.second.empty(); });

  for (const auto& [pid, users] : approvers) {
    auto it = disapprovers.find(pid);
    if (it == disapprovers.end()) continue;
    for (const UserId& u : users) {
      if (it->second.count(u) > 0) {
        fail_data("user '" + u + "' both approves and disapproves proposal '" + pid + "'");
      }
    }
  }

  std::set<UserId> all_users;
  for (const auto& [pid, users] : approvers) {
    for (const UserId& u : users) {
      profile.approved_by_user_[u].insert(pid);
      all_users.insert(u);
    }
  }
  for (const auto& [pid, users] : disapprovers) {
    all_users.insert(users.begin(), users.end());
  }

  profile.approvers_ = std::move(approvers);
  profile.disapprovers_ = std::move(disapprovers);
  profile.users_.assign(all_users.begin(), all_users.end());
  return profile;
}

std::size_t ApprovalProfile::approval_count(const ProposalId& p) const {
  auto it = approvers_.find(p);
  return it == approvers_.end() ? 0 : it->second.size();
}

std::size_t ApprovalProfile::disapproval_count(const ProposalId& p) const {
  auto it = disapprovers_.find(p);
  return it == disapprovers_.end() ? 0 : it->second.size();
}

bool ApprovalProfile::approves(const UserId& u, const ProposalId& p) const {
  auto it = approvers_.find(p);
  return it != approvers_.end() && it->second.count(u) > 0;
}

std::string day_key_utc(std::int64_t t) {
  std::int64_t days = t / 86400;
  if (t % 86400 < 0) --days;
  // Civil-from-days (Howard Hinnant's algorithm), proleptic Gregorian.
  days += 719468;
  const std::int64_t era = (days >= 0 ? days : days - 146096) / 146097;
  const unsigned doe = static_cast<unsigned>(days - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const std::int64_t y = static_cast<std::int64_t>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  const unsigned d = doy - (153 * mp + 2) / 5 + 1;
  const unsigned m = mp < 10 ? mp + 3 : mp - 9;
  const std::int64_t year = y + (m <= 2);

  char buf[32];
  std::snprintf(buf, sizeof(buf), "%04lld-%02u-%02u", static_cast<long long>(year), m, d);
  return buf;
}

SortContext SortContext::at(std::int64_t now, std::uint64_t seed) {
  SortContext ctx;
  ctx.now = now;
  ctx.seed = seed;
  ctx.day_key = day_key_utc(now);
  return ctx;
}

ApprovalProfile build_profile(const std::vector<EvaluationEvent>& events,
                              const std::vector<Proposal>& proposals) {
  std::set<ProposalId> known;
  for (const Proposal& p : proposals) known.insert(p.id);

  struct Latest {
    std::int64_t at;
    std::size_t seq;
    Polarity polarity;
  };
  std::map<std::pair<UserId, ProposalId>, Latest> latest;

  for (std::size_t i = 0; i < events.size(); ++i) {
    const EvaluationEvent& e = events[i];
    if (known.count(e.proposal) == 0) {
      fail_data("event references unknown proposal '" + e.proposal + "'");
    }
    if (e.polarity != Polarity::Approve && e.polarity != Polarity::Disapprove) {
      fail_data("event for proposal '" + e.proposal + "' has malformed polarity");
    }
    auto key = std::make_pair(e.user, e.proposal);
    auto it = latest.find(key);
    // Last write wins; equal timestamps resolved by sequence order.
    if (it == latest.end() || e.at > it->second.at ||
        (e.at == it->second.at && i > it->second.seq)) {
      latest[key] = Latest{e.at, i, e.polarity};
    }
  }

  std::map<ProposalId, std::set<UserId>> approvers;
  std::map<ProposalId, std::set<UserId>> disapprovers;
  for (const auto& [key, last] : latest) {
    if (last.polarity == Polarity::Approve) {
      approvers[key.second].insert(key.first);
    } else {
      disapprovers[key.second].insert(key.first);
    }
  }
  return ApprovalProfile::from_sets(std::move(approvers), std::move(disapprovers));
}

namespace {

constexpr std::int64_t kS100SubmittedAt = 1700000000;

std::string two_digits(int i) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%02d", i);
  return buf;
}

}  // namespace

std::pair<std::vector<Proposal>, ApprovalProfile> scenario_s100() {
  struct Group {
    char proposal_prefix;
    char user_prefix;
    int size;
  };
  const Group groups[] = {{'x', 'A', 45}, {'y', 'B', 35}, {'z', 'C', 20}};

  std::vector<Proposal> proposals;
  std::map<ProposalId, std::set<UserId>> approvers;

  for (const Group& g : groups) {
    std::set<UserId> members;
    for (int u = 1; u <= g.size; ++u) {
      members.insert(std::string("u") + g.user_prefix + two_digits(u));
    }
    for (int i = 1; i <= 10; ++i) {
      Proposal p;
      p.id = std::string(1, g.proposal_prefix) + two_digits(i);
      p.title = "Proposal " + p.id;
      p.author = "author-" + p.id;
      p.submitted_at = kS100SubmittedAt;
      proposals.push_back(std::move(p));
      approvers[proposals.back().id] = members;
    }
  }

  return {std::move(proposals), ApprovalProfile::from_sets(std::move(approvers))};
}

std::vector<const Proposal*> sorted_by_id(const std::vector<Proposal>& proposals) {
  std::vector<const Proposal*> by_id;
  by_id.reserve(proposals.size());
  for (const Proposal& p : proposals) {
    if (p.id.empty()) fail_data("proposal with empty id");
    by_id.push_back(&p);
  }
  std::sort(by_id.begin(), by_id.end(),
            [](const Proposal* a, const Proposal* b) { return a->id < b->id; });
  for (std::size_t i = 1; i < by_id.size(); ++i) {
    if (by_id[i - 1]->id == by_id[i]->id) {
      fail_data("duplicate proposal id '" + by_id[i]->id + "'");
    }
  }
  return by_id;
}

std::vector<std::int32_t> tiebreak_ranks(const std::vector<const Proposal*>& by_id,
                                         TieBreak tb) {
  const int n = static_cast<int>(by_id.size());
  std::vector<std::int32_t> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;

  if (tb != TieBreak::ById) {
    std::stable_sort(idx.begin(), idx.end(), [&](std::int32_t a, std::int32_t b) {
      if (by_id[a]->submitted_at != by_id[b]->submitted_at) {
        return tb == TieBreak::OldestFirst
                   ? by_id[a]->submitted_at < by_id[b]->submitted_at
                   : by_id[a]->submitted_at > by_id[b]->submitted_at;
      }
      return a < b;  // id order as the final fallback
    });
  }

  std::vector<std::int32_t> rank(n);
  for (int pos = 0; pos < n; ++pos) rank[idx[pos]] = pos;
  return rank;
}

ProfileIndex::ProfileIndex(const std::vector<Proposal>& proposals,
                           const ApprovalProfile& profile) {
  proposals_ = sorted_by_id(proposals);
  proposal_ids_.reserve(proposals_.size());
  for (const Proposal* p : proposals_) proposal_ids_.push_back(p->id);

  user_ids_ = profile.users();
  std::unordered_map<std::string_view, std::int32_t> user_index;
  user_index.reserve(user_ids_.size());
  for (std::size_t u = 0; u < user_ids_.size(); ++u) {
    user_index.emplace(user_ids_[u], static_cast<std::int32_t>(u));
  }

  approvers_of_.assign(proposal_ids_.size(), {});
  approvals_of_.assign(user_ids_.size(), {});
  for (std::size_t p = 0; p < proposal_ids_.size(); ++p) {
    auto it = profile.approvers().find(proposal_ids_[p]);
    if (it == profile.approvers().end()) continue;
    auto& row = approvers_of_[p];
    row.reserve(it->second.size());
    for (const UserId& u : it->second) {
      std::int32_t ui = user_index.at(u);
      row.push_back(ui);
      approvals_of_[ui].push_back(static_cast<std::int32_t>(p));
    }
  }
}

int ProfileIndex::proposal_index(const ProposalId& id) const {
  auto it = std::lower_bound(proposal_ids_.begin(), proposal_ids_.end(), id);
  if (it == proposal_ids_.end() || *it != id) return -1;
  return static_cast<int>(it - proposal_ids_.begin());
}

}  // namespace delib
