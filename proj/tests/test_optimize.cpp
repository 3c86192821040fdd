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


#include <doctest.h>

#include "lockedmat/optimize.hpp"
#include "lockedmat/polytope.hpp"
#include "support.hpp"

using namespace lockedmat;
using lmtest::kind_of;

namespace {

WeightFunction weights(std::initializer_list<int> values) {
  WeightFunction c;
  for (int v : values) c.emplace_back(v);
  return c;
}

// Random rationals in [-5, 5] with small denominators; with probability one
// half a weight is copied from an earlier element to force ties.
WeightFunction random_weights(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> num(-20, 20), den(1, 4), coin(0, 1);
  WeightFunction c;
  for (int i = 0; i < n; ++i) {
    if (i > 0 && coin(rng)) {
      std::uniform_int_distribution<int> prev(0, i - 1);
      c.push_back(c[prev(rng)]);
    } else {
      c.emplace_back(num(rng), den(rng));
    }
  }
  return c;
}

Rational value_of(const WeightFunction& c, Subset b) {
  Rational v = 0;
  for (int e : b.elements()) v += c[e];
  return v;
}

}  // namespace

TEST_CASE("greedy examples") {
  const Matroid k4 = mk4();
  const auto r = greedy_max_basis(k4, weights({5, 4, 3, 2, 1, 0}));
  CHECK(r.basis == k4.ground().subset({"ab", "ac", "ad"}));
  CHECK(r.value == 12);
  REQUIRE(r.trace.size() == 6);
  CHECK(r.trace[0].element == 0);
  CHECK(r.trace[0].accepted);
  CHECK_FALSE(r.trace[3].accepted);

  for (const auto& [name, m] : lmtest::catalog_pool()) {
    const auto z = greedy_max_basis(m, WeightFunction(m.size()));
    CHECK(z.value == 0);
    CHECK(m.is_basis(z.basis));
  }

  const auto u = greedy_max_basis(uniform(2, 4), weights({3, 1, 4, 1}));
  CHECK(u.basis == Subset(0b0101));
  CHECK(u.value == 7);

  CHECK(kind_of([&] { (void)greedy_max_basis(k4, weights({1, 2})); }) ==
        ErrorKind::DimensionMismatch);
}

TEST_CASE("greedy trace orders by weight then index") {
  const auto r = greedy_max_basis(uniform(2, 4), weights({1, 2, 2, 1}));
  std::vector<int> order;
  for (const auto& s : r.trace) order.push_back(s.element);
  CHECK(order == std::vector<int>{1, 2, 0, 3});
  CHECK(r.basis == Subset(0b0110));
}

TEST_CASE("brute force examples") {
  const Matroid single = uniform(2, 2);
  CHECK(brute_force_max_basis(single, weights({-3, 7})).basis ==
        single.ground_mask());
  const auto r = brute_force_max_basis(uniform(1, 2), weights({-1, -2}));
  CHECK(r.basis == Subset(0b01));
  CHECK(r.value == -1);
  // ties resolve to the canonically smallest basis
  CHECK(brute_force_max_basis(uniform(2, 4), WeightFunction(4)).basis ==
        Subset(0b0011));
}

TEST_CASE("greedy matches brute force on random weights") {
  std::mt19937_64 rng(20261018);
  for (const auto& [name, m] : lmtest::catalog_pool()) {
    CAPTURE(name);
    for (int trial = 0; trial < 200; ++trial) {
      const auto c = random_weights(rng, m.size());
      const auto g = greedy_max_basis(m, c);
      REQUIRE(m.is_basis(g.basis));
      REQUIRE(g.value == value_of(c, g.basis));
      REQUIRE(g.value == brute_force_max_basis(m, c).value);
    }
  }
}

TEST_CASE("greedy optimum is a vertex of the predicted system") {
  std::mt19937_64 rng(7);
  for (const auto& [name, m] : lmtest::catalog_pool()) {
    CAPTURE(name);
    const auto sys = predicted_facets_bases(m);
    for (int trial = 0; trial < 20; ++trial) {
      const auto g = greedy_max_basis(m, random_weights(rng, m.size()));
      CHECK(sys.equality->tight_at(g.basis));
      for (const auto& c : sys.facets) REQUIRE(c.satisfied_by(g.basis));
    }
  }
}

TEST_CASE("no convex combination beats the best vertex") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> mix(0, 9);
  for (const auto& [name, m] : lmtest::catalog_pool()) {
    CAPTURE(name);
    const auto c = random_weights(rng, m.size());
    const Rational best = greedy_max_basis(m, c).value;
    std::vector<Rational> vertex_values;
    for (const Subset b : m.bases()) vertex_values.push_back(value_of(c, b));
    CHECK(*std::max_element(vertex_values.begin(), vertex_values.end()) ==
          best);
    for (int trial = 0; trial < 10000; ++trial) {
      // c . (sum l_i v_i) / sum l_i, computed via the vertex values
      Rational num = 0;
      long total = 0;
      for (const Rational& v : vertex_values) {
        const int l = mix(rng);
        num += v * l;
        total += l;
      }
      if (total == 0) continue;
      REQUIRE(num / total <= best);
    }
  }
}

TEST_CASE("rank and independence through optimization examples") {
  const Matroid k4 = mk4();
  const Subset tri = k4.ground().subset({"ab", "ac", "bc"});
  CHECK(rank_via_optimization(k4, tri) == 2);
  CHECK(rank_via_optimization(k4, Subset()) == 0);
  CHECK(rank_via_optimization(k4, k4.ground_mask()) == 3);
  CHECK_FALSE(independent_via_optimization(k4, tri));
  CHECK(independent_via_optimization(k4, k4.ground().subset({"ab", "cd"})));
  CHECK(independent_via_optimization(k4, Subset()));
  CHECK(kind_of([&] { (void)rank_via_optimization(k4, Subset(1U << 9)); }) ==
        ErrorKind::ForeignElement);
}

TEST_CASE("optimization reductions agree with rank everywhere") {
  for (const auto& [name, m] : lmtest::catalog_pool()) {
    CAPTURE(name);
    for (const Subset x : lmtest::all_subsets(m.size())) {
      REQUIRE(rank_via_optimization(m, x) == m.rank(x));
      REQUIRE(independent_via_optimization(m, x) == (m.rank(x) == x.size()));
    }
  }
}
