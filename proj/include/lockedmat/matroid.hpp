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

#ifndef LOCKEDMAT_MATROID_HPP_
#define LOCKEDMAT_MATROID_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "lockedmat/subset.hpp"

namespace lockedmat {

struct RankQueryResult {
  int value = 0;
  // An independent subset of the query set with |witness| == value.
  Subset witness;
};

enum class Validation { Skip, ExchangeAxiom };

// A matroid given by its explicit basis family. Immutable after
// construction; every query is exact and derived from the bases alone.
class Matroid {
 public:
  // Bases are deduplicated and stored in increasing bitmask order.
  // Throws EmptyGroundSet, GroundSetTooLarge, EmptyBasisFamily,
  // UnequalBasisSizes, ForeignElement and, when validating,
  // ExchangeAxiomViolated.
  static Matroid build(GroundSet ground, std::vector<Subset> bases,
                       Validation validation = Validation::ExchangeAxiom);

  const GroundSet& ground() const { return ground_; }
  int size() const { return ground_.size(); }
  Subset ground_mask() const { return ground_.full(); }
  // r(E).
  int rank() const { return rank_; }
  std::span<const Subset> bases() const { return bases_; }

  bool is_basis(Subset s) const;
  bool is_independent(Subset s) const;

  // r(X) = max over bases B of |B ∩ X|, with an attaining witness.
  RankQueryResult rank_query(Subset x) const;
  int rank(Subset x) const { return rank_query(x).value; }
  // r*(X) = |X| - r(E) + r(E \ X).
  int corank(Subset x) const;

  Subset loops() const;
  Subset coloops() const;

  // Throws ForeignElement if x has members outside the ground set.
  void require_within(Subset x) const;

  friend bool operator==(const Matroid& a, const Matroid& b) {
    return a.ground_ == b.ground_ && a.bases_ == b.bases_;
  }

 private:
  Matroid() = default;

  GroundSet ground_;
  std::vector<Subset> bases_;
  // One bit per subset of E; set for bases.
  std::vector<std::uint64_t> basis_table_;
  int rank_ = 0;
};

// Throws ExchangeAxiomViolated naming (B1, B2, e) for the first failure.
void check_exchange_axiom(const Matroid& m);

Matroid dual(const Matroid& m);
// M|X. Throws EmptyGroundSet for X = ∅.
Matroid restrict(const Matroid& m, Subset x);
// M/X = (M* | (E \ X))*. Throws EmptyGroundSet for X = E.
Matroid contract(const Matroid& m, Subset x);
// Disjoint union; labels must not collide.
Matroid direct_sum(const Matroid& a, const Matroid& b);

Subset closure(const Matroid& m, Subset x);
bool is_closed(const Matroid& m, Subset x);

// Connected components of M|X (respectively M*|X), ordered by lowest element.
std::vector<Subset> restriction_components(const Matroid& m, Subset x);
std::vector<Subset> dual_restriction_components(const Matroid& m, Subset x);
bool restriction_connected(const Matroid& m, Subset x);
bool dual_restriction_connected(const Matroid& m, Subset x);

std::vector<Subset> components(const Matroid& m);
bool is_connected(const Matroid& m);
// Reference implementation: searches every proper nonempty X for
// r(X) + r(E \ X) = r(E).
bool is_connected_exhaustive(const Matroid& m);
// Connected and without a 2-separation. For |E| < 4 this is is_connected.
bool is_3_connected(const Matroid& m);

// Partition of E into parallel classes. Throws LoopPresent.
std::vector<Subset> parallel_closures(const Matroid& m);
// Partition of E into series classes. Throws ColoopPresent.
std::vector<Subset> coparallel_closures(const Matroid& m);

}  // namespace lockedmat

#endif  // LOCKEDMAT_MATROID_HPP_
