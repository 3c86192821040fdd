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

#ifndef LOCKEDMAT_CATALOG_HPP_
#define LOCKEDMAT_CATALOG_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lockedmat/matroid.hpp"

namespace lockedmat {

// U_{r,n} on labels "1".."n". Throws BadParameters.
Matroid uniform(int r, int n);

using Edge = std::pair<int, int>;

// Cycle matroid of a connected multigraph; edge i is labelled "e<i>" unless
// labels are supplied. Throws DisconnectedGraph, BadParameters.
Matroid graphic(int vertices, const std::vector<Edge>& edges,
                std::vector<std::string> labels = {});

bool is_circuit_hyperplane(const Matroid& m, Subset h);
// Adds the circuit-hyperplane h to the bases. Throws NotCircuitHyperplane.
Matroid relax(const Matroid& m, Subset h);

// 2-sum along basepoints p1 ∈ M1 and p2 ∈ M2; surviving labels are prefixed
// "L." and "R.". Throws BasepointDegenerate, BadParameters.
Matroid two_sum(const Matroid& m1, int p1, const Matroid& m2, int p2);

// M(K4) on {ab,ac,ad,bc,bd,cd}: every 3-subset except the four triangles.
Matroid mk4();
// The triangles of mk4() in lexicographic order.
std::vector<Subset> mk4_triangles();
// M(K4) with its first `count` triangles relaxed: 1 gives W3, 2 Q6, 3 P6 and
// 4 U_{3,6}.
Matroid relaxation_chain(int count);
// Vámos matroid on {a,a',b,b',c,c',d,d'}.
Matroid vamos();

struct CatalogEntry {
  std::string name;
  Matroid matroid;
  std::optional<int> expected_locked_number;
};

// MK4, W3, Q6, P6, V8 or U_<r>_<n>. Throws UnknownName.
CatalogEntry catalog_get(const std::string& name);
std::vector<std::string> catalog_named();

}  // namespace lockedmat

#endif  // LOCKEDMAT_CATALOG_HPP_
