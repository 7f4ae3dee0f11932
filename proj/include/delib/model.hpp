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
// Domain model: proposals, evaluation events, approval-profile snapshots,
// inspection stats, and ranked-list provenance. Profiles are immutable
// snapshots; sorters never see live event streams.

#ifndef DELIB_MODEL_HPP
#define DELIB_MODEL_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace delib {

// Opaque identifiers. The total order used for all deterministic
// tie-breaking is byte-lexicographic (std::string's operator<).
using ProposalId = std::string;
using UserId = std::string;

enum class Polarity : int {
  Approve = +1,
  Disapprove = -1,
};

struct Proposal {
  ProposalId id;
  std::string title;
  std::string body;
  std::set<std::string> tags;        // deduplicated; first element = primary tag
  std::optional<double> cost;        // non-negative when present
  UserId author;
  std::int64_t submitted_at = 0;     // UTC epoch seconds
  std::int64_t comment_count = 0;
};

struct EvaluationEvent {
  UserId user;
  ProposalId proposal;
  Polarity polarity = Polarity::Approve;
  std::int64_t at = 0;
};

// Snapshot of who approves/disapproves what. approved_by_user() is the
// exact transpose of approvers(); a user appears in at most one of
// approvers/disapprovers per proposal. Immutable after construction and
// safe to share across threads.
class ApprovalProfile {
 public:
  ApprovalProfile() = default;

  // Builds the transpose index and drops empty sets so structurally equal
  // profiles compare equal. Rejects users listed on both sides of one
  // proposal.
  static ApprovalProfile from_sets(std::map<ProposalId, std::set<UserId>> approvers,
                                   std::map<ProposalId, std::set<UserId>> disapprovers = {});

  const std::map<ProposalId, std::set<UserId>>& approvers() const { return approvers_; }
  const std::map<ProposalId, std::set<UserId>>& disapprovers() const { return disapprovers_; }
  const std::map<UserId, std::set<ProposalId>>& approved_by_user() const {
    return approved_by_user_;
  }

  std::size_t approval_count(const ProposalId& p) const;
  std::size_t disapproval_count(const ProposalId& p) const;
  bool approves(const UserId& u, const ProposalId& p) const;

  // Distinct users that cast at least one (dis)approval, sorted.
  const std::vector<UserId>& users() const { return users_; }
  std::size_t user_count() const { return users_.size(); }

  bool operator==(const ApprovalProfile& other) const {
    return approvers_ == other.approvers_ && disapprovers_ == other.disapprovers_;
  }

 private:
  std::map<ProposalId, std::set<UserId>> approvers_;
  std::map<ProposalId, std::set<UserId>> disapprovers_;
  std::map<UserId, std::set<ProposalId>> approved_by_user_;
  std::vector<UserId> users_;
};

// Per-proposal list-impression counts in inspected positions. Deployments
// may substitute click or dwell data through the same field.
struct InspectionStats {
  std::map<ProposalId, std::int64_t> views;

  std::int64_t of(const ProposalId& p) const {
    auto it = views.find(p);
    return it == views.end() ? 0 : it->second;
  }
};

enum class TieBreak {
  ById,         // byte-lexicographic id order
  OldestFirst,  // smallest submitted_at first, then id
  NewestFirst,  // largest submitted_at first, then id
};

// Everything a sorter may depend on besides platform data. day_key is
// always the UTC calendar date of `now`.
struct SortContext {
  std::int64_t now = 0;
  std::uint64_t seed = 0;
  std::optional<std::string> session_key;
  std::optional<UserId> viewer;
  std::string day_key;

  static SortContext at(std::int64_t now, std::uint64_t seed);

  bool operator==(const SortContext&) const = default;
};

// Output of every sorter: a permutation of the input proposal ids plus
// provenance. produced_at is context.now, never the wall clock.
struct RankedList {
  std::vector<ProposalId> order;
  std::string method;
  std::optional<std::uint64_t> seed;  // set when randomness was consumed
  SortContext context;
  std::int64_t produced_at = 0;

  bool operator==(const RankedList&) const = default;
};

// "YYYY-MM-DD" for the UTC day containing the given epoch second.
std::string day_key_utc(std::int64_t epoch_seconds);

// Collapses an event log into a snapshot. For each (user, proposal) pair
// only the latest event counts; timestamp ties go to the later event in
// sequence order. Rejects events that reference unknown proposals.
ApprovalProfile build_profile(const std::vector<EvaluationEvent>& events,
                              const std::vector<Proposal>& proposals);

// The 100-user / 30-proposal fixture: disjoint groups A (45 users,
// x01..x10), B (35, y01..y10), C (20, z01..z10), every group member
// approving exactly their group's pool. Proposal ids are zero-padded so
// that index order equals byte-lexicographic order.
std::pair<std::vector<Proposal>, ApprovalProfile> scenario_s100();

// Proposals sorted by id; rejects duplicate ids. Shared by all sorters so
// equal inputs always enter comparators in one canonical order.
std::vector<const Proposal*> sorted_by_id(const std::vector<Proposal>& proposals);

// Rank positions implementing a TieBreak over id-sorted proposals: the
// candidate with the smaller rank wins a tie. ById is the identity.
std::vector<std::int32_t> tiebreak_ranks(const std::vector<const Proposal*>& by_id,
                                         TieBreak tb);

// Integer-flattened view over (proposals, profile) for the inner loops of
// holistic rules, metrics, and the simulator. Proposal index order is
// byte-lexicographic id order; user index order is sorted profile users.
class ProfileIndex {
 public:
  ProfileIndex(const std::vector<Proposal>& proposals, const ApprovalProfile& profile);

  int proposal_count() const { return static_cast<int>(proposal_ids_.size()); }
  int user_count() const { return static_cast<int>(user_ids_.size()); }

  const ProposalId& proposal_id(int p) const { return proposal_ids_[p]; }
  const Proposal& proposal(int p) const { return *proposals_[p]; }
  const UserId& user_id(int u) const { return user_ids_[u]; }

  const std::vector<std::int32_t>& approvers_of(int p) const { return approvers_of_[p]; }
  const std::vector<std::int32_t>& approvals_of(int u) const { return approvals_of_[u]; }

  int proposal_index(const ProposalId& id) const;  // -1 if absent

 private:
  std::vector<ProposalId> proposal_ids_;
  std::vector<const Proposal*> proposals_;
  std::vector<UserId> user_ids_;
  std::vector<std::vector<std::int32_t>> approvers_of_;
  std::vector<std::vector<std::int32_t>> approvals_of_;
};

}  // namespace delib

#endif  // DELIB_MODEL_HPP
