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

#ifndef LOCKEDMAT_LOCKED_HPP_
#define LOCKEDMAT_LOCKED_HPP_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "lockedmat/matroid.hpp"

namespace lockedmat {

// L is locked when M|L and M*|(E\L) are connected and
// min(r(L), r*(E\L)) >= 2. Throws NotProperSubset for L = ∅ or L = E.
bool is_locked(const Matroid& m, Subset l);

// All locked subsets in canonical order. A disconnected matroid contributes
// the locked subsets of each of its components. With a cap, the scan stops
// as soon as cap + 1 sets have been found.
std::vector<Subset> enumerate_locked(const Matroid& m,
                                     std::optional<std::uint64_t> cap = {});

// Applies the definition to the whole ground set, ignoring components.
// Agrees with enumerate_locked on connected matroids.
std::vector<Subset> enumerate_locked_direct(
    const Matroid& m, std::optional<std::uint64_t> cap = {});

struct LockedStructure {
  std::vector<Subset> parallel;
  std::vector<Subset> coparallel;
  std::vector<Subset> locked;
  // Rank of every member of parallel ∪ coparallel ∪ locked ∪ {∅, E},
  // canonical order, no repeated keys.
  std::vector<std::pair<Subset, int>> rho;

  std::optional<int> rho_of(Subset s) const;
};

// Throws LoopPresent / ColoopPresent.
LockedStructure locked_structure(const Matroid& m);

// |E|^k, saturating at UINT64_MAX.
std::uint64_t locked_threshold(int ground_size, int k);

struct KLockedVerdict {
  // Empty means "No": more than |E|^k locked subsets exist.
  std::optional<LockedStructure> structure;
  std::uint64_t threshold = 0;
  // Number of locked subsets seen before the verdict (at most threshold+1).
  std::uint64_t locked_seen = 0;

  bool is_no() const { return !structure.has_value(); }
};

// ℓ(M) ∈ O(|E|^k) is decided for the single instance as ℓ(M) <= |E|^k.
KLockedVerdict k_locked_oracle(const Matroid& m, int k);

struct LockedNumbers {
  int ell = 0;
  int rank_of_m = 0;
  int parallel_count = 0;
  int coparallel_count = 0;

  friend bool operator==(const LockedNumbers&,
                         const LockedNumbers&) = default;
};

// Throws LoopPresent / ColoopPresent.
LockedNumbers locked_number_oracle(const Matroid& m);

}  // namespace lockedmat

#endif  // LOCKEDMAT_LOCKED_HPP_
