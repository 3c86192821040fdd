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

#include "lockedmat/locked.hpp"

#include <algorithm>
#include <limits>

#include "lockedmat/error.hpp"

namespace lockedmat {
namespace {

// Locked test without the proper-subset precondition check.
bool locked_unchecked(const Matroid& m, Subset l) {
  const Subset rest = l.complement(m.size());
  if (m.rank(l) < 2 || m.corank(rest) < 2) return false;
  return restriction_connected(m, l) && dual_restriction_connected(m, rest);
}

// Canonical-order scan of the proper nonempty subsets of E.
std::vector<Subset> scan_locked(const Matroid& m, std::optional<std::uint64_t> cap) {
  std::vector<Subset> found;
  const std::uint64_t limit =
      cap ? (*cap == std::numeric_limits<std::uint64_t>::max() ? *cap
                                                               : *cap + 1)
          : std::numeric_limits<std::uint64_t>::max();
  const Subset full = m.ground_mask();
  for_each_subset_canonical(m.size(), [&](Subset l) {
    if (l.empty() || l == full) return true;
    if (locked_unchecked(m, l)) found.push_back(l);
    return found.size() < limit;
  });
  return found;
}

// Maps a subset of the restriction to `part` back to positions in E.
Subset expand(Subset local, Subset part) {
  Subset out;
  const auto members = part.elements();
  for (int i : local.elements()) out = out.with(members[i]);
  return out;
}

}  // namespace

bool is_locked(const Matroid& m, Subset l) {
  m.require_within(l);
  if (l.empty() || l == m.ground_mask()) {
    throw Error(ErrorKind::NotProperSubset, m.ground().format(l));
  }
  return locked_unchecked(m, l);
}

std::vector<Subset> enumerate_locked_direct(const Matroid& m,
                                            std::optional<std::uint64_t> cap) {
  return scan_locked(m, cap);
}

std::vector<Subset> enumerate_locked(const Matroid& m,
                                     std::optional<std::uint64_t> cap) {
  const auto parts = components(m);
  if (parts.size() == 1) return scan_locked(m, cap);

  std::vector<Subset> found;
  for (Subset part : parts) {
    if (part.size() < 2) continue;
    const Matroid piece = restrict(m, part);
    for (Subset local : scan_locked(piece, {})) {
      found.push_back(expand(local, part));
    }
  }
  sort_canonical(found);
  if (cap && found.size() > *cap + 1 &&
      *cap != std::numeric_limits<std::uint64_t>::max()) {
    found.resize(*cap + 1);
  }
  return found;
}

std::optional<int> LockedStructure::rho_of(Subset s) const {
  for (const auto& [key, value] : rho) {
    if (key == s) return value;
  }
  return std::nullopt;
}

namespace {

LockedStructure assemble(const Matroid& m, std::vector<Subset> locked) {
  LockedStructure out;
  out.parallel = parallel_closures(m);
  out.coparallel = coparallel_closures(m);
  out.locked = std::move(locked);

  std::vector<Subset> keys{Subset(), m.ground_mask()};
  keys.insert(keys.end(), out.parallel.begin(), out.parallel.end());
  keys.insert(keys.end(), out.coparallel.begin(), out.coparallel.end());
  keys.insert(keys.end(), out.locked.begin(), out.locked.end());
  sort_canonical(keys);
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  for (Subset k : keys) out.rho.emplace_back(k, m.rank(k));
  return out;
}

}  // namespace

LockedStructure locked_structure(const Matroid& m) {
  // Partitions first so loop/coloop errors surface before the scan.
  parallel_closures(m);
  coparallel_closures(m);
  return assemble(m, enumerate_locked(m));
}

std::uint64_t locked_threshold(int ground_size, int k) {
  if (k < 0) throw Error(ErrorKind::BadParameters, "k must be nonnegative");
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t value = 1;
  const auto base = static_cast<std::uint64_t>(ground_size);
  for (int i = 0; i < k; ++i) {
    if (base != 0 && value > kMax / base) return kMax;
    value *= base;
  }
  return value;
}

KLockedVerdict k_locked_oracle(const Matroid& m, int k) {
  KLockedVerdict verdict;
  verdict.threshold = locked_threshold(m.size(), k);
  parallel_closures(m);
  coparallel_closures(m);
  auto locked = enumerate_locked(m, verdict.threshold);
  verdict.locked_seen = locked.size();
  if (locked.size() > verdict.threshold) return verdict;
  verdict.structure = assemble(m, std::move(locked));
  return verdict;
}

LockedNumbers locked_number_oracle(const Matroid& m) {
  LockedNumbers out;
  out.parallel_count = static_cast<int>(parallel_closures(m).size());
  out.coparallel_count = static_cast<int>(coparallel_closures(m).size());
  out.ell = static_cast<int>(enumerate_locked(m).size());
  out.rank_of_m = m.rank();
  return out;
}

}  // namespace lockedmat
