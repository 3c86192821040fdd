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

#ifndef LOCKEDMAT_OPTIMIZE_HPP_
#define LOCKEDMAT_OPTIMIZE_HPP_

#include <vector>

#include "lockedmat/matroid.hpp"
#include "lockedmat/rational.hpp"

namespace lockedmat {

// One exact weight per element, indexed by ground-set position.
using WeightFunction = std::vector<Rational>;

struct GreedyStep {
  int element = 0;
  bool accepted = false;
};

struct OptimizationResult {
  Subset basis;
  Rational value;
  // Greedy decisions in scan order; empty for the brute-force solver.
  std::vector<GreedyStep> trace;
};

// Scans by (weight desc, membership in `preferred` desc, index asc) and keeps
// every element that leaves the current set independent. Throws
// DimensionMismatch when the weight count differs from |E|.
OptimizationResult greedy_max_basis(const Matroid& m, const WeightFunction& c,
                                    Subset preferred = {});

// Exhaustive maximum over the basis family; ties go to the lexicographically
// smallest basis.
OptimizationResult brute_force_max_basis(const Matroid& m,
                                         const WeightFunction& c);

// Value of the optimum basis for the characteristic weights of X.
int rank_via_optimization(const Matroid& m, Subset x);
// X is contained in the optimum basis for the characteristic weights of X.
bool independent_via_optimization(const Matroid& m, Subset x);

}  // namespace lockedmat

#endif  // LOCKEDMAT_OPTIMIZE_HPP_
