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

#ifndef LOCKEDMAT_POLYTOPE_HPP_
#define LOCKEDMAT_POLYTOPE_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lockedmat/matroid.hpp"
#include "lockedmat/rational.hpp"

namespace lockedmat {

enum class Sense { LessEq, GreaterEq, Equal };

enum class ConstraintOrigin {
  Nonnegativity,    // x(e) >= 0
  ParallelUpper,    // x(P) <= 1, P a parallel class
  CoparallelLower,  // x(S) >= |S| - 1, S a series class with |S| >= 2
  LockedUpper,      // x(L) <= r(L), L locked
  RankUpper,        // x(A) <= r(A)
  RankEquality,     // x(E) = r(E)
};

std::string_view to_string(Sense sense);
std::string_view to_string(ConstraintOrigin origin);

struct LinearConstraint {
  std::vector<std::int64_t> coeffs;
  Sense sense = Sense::LessEq;
  std::int64_t rhs = 0;
  ConstraintOrigin origin = ConstraintOrigin::RankUpper;

  // Constraint x(S) <sense> rhs over an n-element ground set.
  static LinearConstraint over(int n, Subset s, Sense sense, std::int64_t rhs,
                               ConstraintOrigin origin);

  Subset support() const;
  std::int64_t evaluate(Subset vertex) const;
  Rational evaluate(std::span<const Rational> x) const;
  bool satisfied_by(Subset vertex) const;
  bool tight_at(Subset vertex) const;

  friend bool operator==(const LinearConstraint&,
                         const LinearConstraint&) = default;
};

// Canonical text form, e.g. "x(ab) + x(ac) + x(bc) <= 2". Terms follow
// ground-set order; unit coefficients are omitted.
std::string format_constraint(const LinearConstraint& c, const GroundSet& g);

struct FacetSystem {
  // x(E) = r(E) for the bases polytope; absent for the independence polytope.
  std::optional<LinearConstraint> equality;
  std::vector<LinearConstraint> facets;
  // Generated constraints dropped because their support is all of E, where
  // they coincide with the equality.
  std::vector<LinearConstraint> collapsed;
};

// Equality, then x(P) <= 1 per parallel class, x(S) >= |S| - 1 per series
// class, x(L) <= r(L) per locked set. Throws LoopPresent, ColoopPresent,
// NotConnected.
FacetSystem predicted_facets_bases(const Matroid& m);

// x(e) >= 0 for every e and x(A) <= r(A) for every closed connected A.
// Throws LoopPresent.
FacetSystem predicted_facets_independence(const Matroid& m);

// Sorted indices of the vertices at which a constraint is tight. Identifies
// a face independently of how its inequality is written.
using TightSet = std::vector<std::uint32_t>;

TightSet tight_set(const LinearConstraint& c, std::span<const Subset> vertices);

// Affine dimension of a set of 0/1 points by fraction-free elimination.
// Throws BadParameters for an empty vertex set.
int polytope_dimension(std::span<const Subset> vertices, int n);

// Incidence vectors of all independent sets, increasing bitmask order.
std::vector<Subset> independent_sets(const Matroid& m);

struct OracleFacet {
  TightSet tight;
  // First candidate inequality, in pool order, that produced this facet.
  LinearConstraint witness;
};

// Facets of P(M) certified by dimension counting over the complete pool
// {x(e) >= 0} ∪ {x(A) <= r(A) : A ≠ ∅}. Throws DegeneratePolytope when M
// has a single basis.
std::vector<OracleFacet> oracle_facets_bases(const Matroid& m);
// Same for Q(M) over the independent sets.
std::vector<OracleFacet> oracle_facets_independence(const Matroid& m);

enum class PolytopeKind { Bases, Independence };

struct CertificationReport {
  PolytopeKind kind = PolytopeKind::Bases;
  int dimension = 0;
  std::size_t vertex_count = 0;
  std::size_t predicted_count = 0;
  std::size_t oracle_count = 0;
  std::size_t matched = 0;
  // Predicted constraints whose face is not a facet.
  std::vector<LinearConstraint> extra;
  // Predicted constraints whose facet repeats an earlier prediction.
  std::vector<LinearConstraint> duplicates;
  // Oracle facets that no prediction reaches.
  std::vector<OracleFacet> missing;
  std::vector<LinearConstraint> collapsed;
  // Sets A that are closed with M|A connected and M*|(E\A) disconnected,
  // yet x(A) <= r(A) defines a facet. Bases polytope only.
  std::vector<Subset> lemma_violations;

  bool passed() const {
    return extra.empty() && duplicates.empty() && missing.empty() &&
           lemma_violations.empty();
  }
  // Throws CertificationFailed listing the symmetric difference.
  void require_passed(const GroundSet& g) const;
};

CertificationReport certify(const Matroid& m);
CertificationReport certify_independence(const Matroid& m);

struct SeparationResult {
  // A most violated constraint; empty when x lies in the polytope.
  std::optional<LinearConstraint> violated;
  Rational violation;
  std::size_t constraints_checked = 0;
};

// Single pass over the system, the equality counted once and checked as two
// inequalities. Throws DimensionMismatch.
SeparationResult separate(const FacetSystem& system,
                          std::span<const Rational> x);

}  // namespace lockedmat

#endif  // LOCKEDMAT_POLYTOPE_HPP_
