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


// Shared helpers for the test binaries: frozen reference values, matroid
// pools and small definitional oracles that do not go through the library's
// optimized code paths.

#ifndef LOCKEDMAT_TESTS_SUPPORT_HPP_
#define LOCKEDMAT_TESTS_SUPPORT_HPP_

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lockedmat/catalog.hpp"
#include "lockedmat/error.hpp"
#include "lockedmat/locked.hpp"
#include "lockedmat/matroid.hpp"
#include "lockedmat/subset.hpp"

#ifndef LOCKEDMAT_FIXTURE_DIR
#error "LOCKEDMAT_FIXTURE_DIR must be defined"
#endif

namespace lmtest {

using namespace lockedmat;

inline const nlohmann::json& oracle_values() {
  static const nlohmann::json data = [] {
    std::ifstream in(std::string(LOCKEDMAT_FIXTURE_DIR) + "/oracle_values.json");
    return nlohmann::json::parse(in);
  }();
  return data;
}

struct Named {
  std::string name;
  Matroid matroid;
};

inline std::vector<Named> catalog_pool() {
  std::vector<Named> out;
  for (const auto& name : {"MK4", "W3", "Q6", "P6", "V8"}) {
    out.push_back({name, catalog_get(name).matroid});
  }
  out.push_back({"U_2_4", uniform(2, 4)});
  out.push_back({"U_3_6", relaxation_chain(4)});
  return out;
}

inline std::vector<Edge> edges_of(const nlohmann::json& j) {
  std::vector<Edge> edges;
  for (const auto& e : j) edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  return edges;
}

// Connected simple graphs on 2..5 vertices, one per isomorphism class.
inline std::vector<Named> graphic_pool() {
  std::vector<Named> out;
  for (const auto& g : oracle_values()["graphic"]) {
    out.push_back({"G" + g["edges"].dump(),
                   graphic(g["vertices"].get<int>(), edges_of(g["edges"]))});
  }
  return out;
}

inline std::vector<Named> uniform_pool(int max_n) {
  std::vector<Named> out;
  for (int n = 1; n <= max_n; ++n) {
    for (int r = 0; r <= n; ++r) {
      out.push_back({"U_" + std::to_string(r) + "_" + std::to_string(n),
                     uniform(r, n)});
    }
  }
  return out;
}

inline std::vector<Named> two_sum_pool() {
  std::vector<Named> out;
  for (const auto& f : oracle_values()["two_sum"]) {
    const int r1 = f["r1"], n1 = f["n1"], r2 = f["r2"], n2 = f["n2"];
    out.push_back({"2sum(U_" + std::to_string(r1) + "_" + std::to_string(n1) +
                       ",U_" + std::to_string(r2) + "_" + std::to_string(n2) +
                       ")",
                   two_sum(uniform(r1, n1), 0, uniform(r2, n2), 0)});
  }
  return out;
}

inline std::vector<Named> chain_pool() {
  std::vector<Named> out;
  for (int k = 0; k <= 4; ++k) {
    out.push_back({"chain" + std::to_string(k), relaxation_chain(k)});
  }
  return out;
}

inline std::vector<Subset> all_subsets(int n) {
  std::vector<Subset> out;
  for (Subset::Bits b = 0; b < (Subset::Bits{1} << n); ++b) {
    out.emplace_back(b);
  }
  return out;
}

// Definitional rank: largest independent subset of X, independence meaning
// "contained in some basis".
inline int naive_rank(const Matroid& m, Subset x) {
  int best = 0;
  for (Subset::Bits b = x.bits();; b = (b - 1) & x.bits()) {
    const Subset y(b);
    if (y.size() > best) {
      for (const Subset basis : m.bases()) {
        if (y.is_subset_of(basis)) {
          best = y.size();
          break;
        }
      }
    }
    if (b == 0) break;
  }
  return best;
}

// Exhaustive separator test for a rank-like function restricted to s.
inline bool naive_connected(const std::function<int(Subset)>& rank, Subset s) {
  if (s.empty()) return false;
  const int rs = rank(s);
  const int low = s.lowest();
  for (Subset::Bits b = s.bits();; b = (b - 1) & s.bits()) {
    const Subset x(b);
    if (!x.empty() && x != s && x.contains(low) &&
        rank(x) + rank(s - x) == rs) {
      return false;
    }
    if (b == 0) break;
  }
  return true;
}

inline bool naive_locked(const Matroid& m, Subset l) {
  const Subset c = l.complement(m.size());
  auto rk = [&](Subset x) { return m.rank(x); };
  auto cork = [&](Subset x) { return m.corank(x); };
  return m.rank(l) >= 2 && m.corank(c) >= 2 && naive_connected(rk, l) &&
         naive_connected(cork, c);
}

inline std::vector<Subset> naive_locked_all(const Matroid& m) {
  std::vector<Subset> out;
  const Subset full = m.ground_mask();
  for (const Subset s : all_subsets(m.size())) {
    if (!s.empty() && s != full && naive_locked(m, s)) out.push_back(s);
  }
  sort_canonical(out);
  return out;
}

// Basis families equal up to some bijection of the ground sets.
inline bool isomorphic(const Matroid& a, const Matroid& b) {
  if (a.size() != b.size() || a.bases().size() != b.bases().size()) {
    return false;
  }
  std::vector<int> perm(a.size());
  for (int i = 0; i < a.size(); ++i) perm[i] = i;
  const std::set<Subset> target(b.bases().begin(), b.bases().end());
  do {
    bool ok = true;
    for (const Subset s : a.bases()) {
      Subset mapped;
      for (int e : s.elements()) mapped = mapped.with(perm[e]);
      if (!target.count(mapped)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Kind of the lockedmat::Error thrown by fn; std::nullopt when nothing is
// thrown.
inline std::optional<ErrorKind> kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

inline Matroid relabeled(const Matroid& m, const std::string& prefix) {
  std::vector<std::string> labels;
  for (const auto& l : m.ground().labels()) labels.push_back(prefix + l);
  return Matroid::build(GroundSet(std::move(labels)),
                        {m.bases().begin(), m.bases().end()},
                        Validation::Skip);
}

// Direct sum with the second summand's labels primed.
inline Matroid disjoint_sum(const Matroid& a, const Matroid& b) {
  return direct_sum(a, relabeled(b, "'"));
}

inline Matroid from_masks(int n, std::initializer_list<Subset::Bits> masks) {
  std::vector<Subset> bases;
  for (auto m : masks) bases.emplace_back(m);
  return Matroid::build(GroundSet::numbered(n), bases);
}

}  // namespace lmtest

#endif  // LOCKEDMAT_TESTS_SUPPORT_HPP_
