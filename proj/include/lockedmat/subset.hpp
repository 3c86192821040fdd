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

#ifndef LOCKEDMAT_SUBSET_HPP_
#define LOCKEDMAT_SUBSET_HPP_

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace lockedmat {

// Hard cap on the ground set size. Every exhaustive routine in the library
// walks 2^|E| subsets, so the cap doubles as a runtime guard.
inline constexpr int kMaxElements = 24;

// A subset of a ground set, stored as a bitmask over element positions.
class Subset {
 public:
  using Bits = std::uint32_t;

  constexpr Subset() = default;
  constexpr explicit Subset(Bits bits) : bits_(bits) {}

  static constexpr Subset singleton(int e) { return Subset(Bits{1} << e); }
  static constexpr Subset full(int n) {
    return Subset(n >= 32 ? ~Bits{0} : (Bits{1} << n) - 1);
  }

  constexpr Bits bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int e) const { return (bits_ >> e) & 1U; }
  constexpr bool is_subset_of(Subset other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr int lowest() const { return std::countr_zero(bits_); }

  constexpr Subset with(int e) const { return Subset(bits_ | (Bits{1} << e)); }
  constexpr Subset without(int e) const {
    return Subset(bits_ & ~(Bits{1} << e));
  }
  // Complement relative to a ground set of n elements.
  constexpr Subset complement(int n) const {
    return Subset(~bits_ & full(n).bits_);
  }

  friend constexpr Subset operator|(Subset a, Subset b) {
    return Subset(a.bits_ | b.bits_);
  }
  friend constexpr Subset operator&(Subset a, Subset b) {
    return Subset(a.bits_ & b.bits_);
  }
  // Set difference.
  friend constexpr Subset operator-(Subset a, Subset b) {
    return Subset(a.bits_ & ~b.bits_);
  }
  friend constexpr bool operator==(Subset, Subset) = default;
  friend constexpr auto operator<=>(Subset, Subset) = default;

  std::vector<int> elements() const;

 private:
  Bits bits_ = 0;
};

// Size first, then lexicographic on the increasing element sequence. This is
// the reporting and enumeration order used throughout the library.
constexpr bool canonical_less(Subset a, Subset b) {
  if (a.size() != b.size()) return a.size() < b.size();
  const Subset::Bits diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  return (a.bits() & (diff & (~diff + 1))) != 0;
}

struct CanonicalLess {
  constexpr bool operator()(Subset a, Subset b) const {
    return canonical_less(a, b);
  }
};

void sort_canonical(std::vector<Subset>& sets);

// Calls fn for every k-subset of {0..n-1} in lexicographic order.
void for_each_combination(int n, int k, const std::function<void(Subset)>& fn);

// Calls fn for every subset of {0..n-1} in canonical order. Returning false
// from fn stops the scan.
void for_each_subset_canonical(int n, const std::function<bool(Subset)>& fn);

// Ordered, duplicate-free element labels.
class GroundSet {
 public:
  GroundSet() = default;
  explicit GroundSet(std::vector<std::string> labels);

  // Labels "1".."n".
  static GroundSet numbered(int n);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int e) const { return labels_.at(e); }
  const std::vector<std::string>& labels() const { return labels_; }
  Subset full() const { return Subset::full(size()); }

  // Throws ForeignElement for labels outside the ground set.
  int index_of(const std::string& label) const;
  Subset subset(std::span<const std::string> labels) const;
  Subset subset(std::initializer_list<std::string> labels) const;

  std::vector<std::string> labels_of(Subset s) const;
  // "{ab,ac,bc}"
  std::string format(Subset s) const;

  friend bool operator==(const GroundSet& a, const GroundSet& b) {
    return a.labels_ == b.labels_;
  }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> index_;
};

}  // namespace lockedmat

#endif  // LOCKEDMAT_SUBSET_HPP_
