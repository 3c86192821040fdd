// Copyright 2026 The Authors.
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

#ifndef LOCKEDMAT_UNIFORMITY_HPP_
#define LOCKEDMAT_UNIFORMITY_HPP_

#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "lockedmat/locked.hpp"
#include "lockedmat/matroid.hpp"

namespace lockedmat {

// Which criterion decided uniformity:
//   I    ℓ = 0 and |P| = |E| = |S|
//   II   |P| = 1
//   III  |S| = 1
//   IV   r = |E|
//   V    r = 0
enum class UniformityCondition { I, II, III, IV, V, None };

std::string_view to_string(UniformityCondition c);

struct UniformityVerdict {
  bool uniform = false;
  UniformityCondition witness = UniformityCondition::None;
  // Absent when the oracle rejected a matroid with loops or coloops.
  std::optional<LockedNumbers> inputs_used;
  std::string note;
};

using LockedNumberOracle = std::function<LockedNumbers(const Matroid&)>;

// Every r(E)-subset is a basis.
bool is_uniform_direct(const Matroid& m);

// Makes exactly one oracle call, then checks IV, V, II, III, I in that
// order. When the oracle refuses a matroid for its loops or coloops, IV and
// V are read from r(E) and |E|; otherwise the matroid is not uniform.
UniformityVerdict test_uniformity(
    const Matroid& m, const LockedNumberOracle& oracle = locked_number_oracle);

// For 3-connected M: uniform iff ℓ(M) = 0. Returns whether the biconditional
// holds. Throws Not3Connected.
bool check_uniform_iff_unlocked(const Matroid& m);

}  // namespace lockedmat

#endif  // LOCKEDMAT_UNIFORMITY_HPP_
