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
// A method name plus every knob any method accepts; one dispatcher serves
// the CLI, the C API, and the simulator.

#ifndef DELIB_METHOD_HPP
#define DELIB_METHOD_HPP

#include <string>
#include <vector>

#include "delib/baseline.hpp"
#include "delib/integrated.hpp"
#include "delib/model.hpp"

namespace delib {

struct MethodSpec {
  std::string name = "approvals";
  TieBreak tiebreak = TieBreak::ById;

  bool newest_first = true;              // date
  bool highest_first = true;             // cost
  double prior_approvals = 1.0;          // ratio
  double prior_total = 2.0;
  std::int64_t window_seconds = 3 * 86400;  // active
  RandomPolicy random_policy = RandomPolicy::PerView;
  bool coverage_reset = true;            // coverage
  IntegratedConfig integrated;           // integrated

  // Rejects unknown method names, listing the valid catalog.
  void validate() const;
};

const std::vector<std::string>& method_names();

inline bool is_random_method(const MethodSpec& m) { return m.name == "random"; }

RankedList run_method(const MethodSpec& m, const std::vector<Proposal>& proposals,
                      const ApprovalProfile& profile, const InspectionStats& views,
                      const std::vector<EvaluationEvent>& events, const SortContext& ctx);

}  // namespace delib

#endif  // DELIB_METHOD_HPP
