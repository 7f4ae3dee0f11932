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

#ifndef DELIB_RATIONAL_HPP
#define DELIB_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace delib {

// Exact rational scores. Proportional rules break ties on exact equality;
// doubles are used only as a pre-filter (see holistic.cpp).
using BigRat = mpq_class;

inline BigRat make_rat(std::int64_t num, std::int64_t den) {
  BigRat q(static_cast<long>(num), static_cast<long>(den));
  q.canonicalize();
  return q;
}

inline double rat_to_double(const BigRat& q) { return q.get_d(); }

inline std::string rat_to_string(const BigRat& q) { return q.get_str(); }

}  // namespace delib

#endif  // DELIB_RATIONAL_HPP
