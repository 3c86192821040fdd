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

#include <limits>

#include "support.hpp"

using namespace lockedmat;
using lmtest::kind_of;

namespace {

std::vector<Subset> triangles() { return mk4_triangles(); }

}  // namespace

TEST_CASE("is_locked examples") {
  const Matroid k4 = mk4();
  for (const Subset t : triangles()) CHECK(is_locked(k4, t));
  const Matroid u24 = uniform(2, 4);
  for (Subset::Bits b = 1; b < 15; ++b) CHECK_FALSE(is_locked(u24, Subset(b)));
  CHECK_FALSE(is_locked(k4, k4.ground().subset({"ab"})));
  CHECK(kind_of([&] { (void)is_locked(k4, Subset()); }) ==
        ErrorKind::NotProperSubset);
  CHECK(kind_of([&] { (void)is_locked(k4, k4.ground_mask()); }) ==
        ErrorKind::NotProperSubset);
}

TEST_CASE("enumerate_locked examples") {
  const auto k4 = enumerate_locked(mk4());
  auto expected = triangles();
  sort_canonical(expected);
  CHECK(k4 == expected);
  CHECK(enumerate_locked(vamos()).size() == 5);
  CHECK(enumerate_locked(uniform(3, 6)).empty());
}

TEST_CASE("locked counts match the reference oracle") {
  const auto& ref = lmtest::oracle_values()["catalog"];
  for (const auto& [name, m] : lmtest::catalog_pool()) {
    CAPTURE(name);
    const auto found = enumerate_locked(m);
    CHECK(found == lmtest::naive_locked_all(m));
    CHECK(found == enumerate_locked_direct(m));
    if (ref.contains(name)) {
      CHECK(found.size() == ref[name]["ell"].get<std::size_t>());
    }
  }
}

TEST_CASE("locked sets are scanned in canonical order and capped") {
  const Matroid v8 = vamos();
  const auto all = enumerate_locked(v8);
  CHECK(std::is_sorted(all.begin(), all.end(), CanonicalLess{}));
  const auto capped = enumerate_locked(v8, 2);
  REQUIRE(capped.size() == 3);
  CHECK(std::equal(capped.begin(), capped.end(), all.begin()));
  CHECK(enumerate_locked(v8, 100) == all);
  CHECK(enumerate_locked(v8, 0).size() == 1);
}

TEST_CASE("locked_structure examples") {
  const auto u = locked_structure(uniform(2, 4));
  CHECK(u.parallel.size() == 4);
  CHECK(u.coparallel.size() == 4);
  CHECK(u.locked.empty());
  for (const Subset p : u.parallel) CHECK(u.rho_of(p) == 1);
  CHECK(u.rho_of(Subset()) == 0);
  CHECK(u.rho_of(Subset::full(4)) == 2);

  const auto k = locked_structure(mk4());
  CHECK(k.parallel.size() == 6);
  CHECK(k.coparallel.size() == 6);
  CHECK(k.locked.size() == 4);
  for (const Subset l : k.locked) CHECK(k.rho_of(l) == 2);

  const auto p = locked_structure(catalog_get("P6").matroid);
  CHECK(p.parallel.size() == 6);
  CHECK(p.coparallel.size() == 6);
  CHECK(p.locked.size() == 1);

  CHECK(kind_of([] { (void)locked_structure(uniform(0, 3)); }) ==
        ErrorKind::LoopPresent);
  CHECK(kind_of([] { (void)locked_structure(uniform(3, 3)); }) ==
        ErrorKind::ColoopPresent);
}

TEST_CASE("rho agrees with rank on every key") {
  for (const auto& [name, m] : lmtest::catalog_pool()) {
    CAPTURE(name);
    const auto s = locked_structure(m);
    for (const auto& [set, r] : s.rho) CHECK(r == m.rank(set));
    for (const Subset l : s.locked) {
      CHECK(!l.empty());
      CHECK(l != m.ground_mask());
    }
    std::set<Subset> distinct(s.locked.begin(), s.locked.end());
    CHECK(distinct.size() == s.locked.size());
  }
}

TEST_CASE("k-locked oracle examples") {
  const auto k1 = k_locked_oracle(mk4(), 1);
  REQUIRE_FALSE(k1.is_no());
  CHECK(k1.threshold == 6);
  CHECK(k1.structure->locked.size() == 4);

  const auto k0 = k_locked_oracle(mk4(), 0);
  CHECK(k0.is_no());
  CHECK(k0.threshold == 1);
  CHECK(k0.locked_seen == 2);

  const auto u = k_locked_oracle(uniform(2, 4), 0);
  REQUIRE_FALSE(u.is_no());
  CHECK(u.structure->locked.empty());

  CHECK(kind_of([] { (void)k_locked_oracle(mk4(), -1); }) ==
        ErrorKind::BadParameters);
}

TEST_CASE("threshold saturates") {
  CHECK(locked_threshold(6, 0) == 1);
  CHECK(locked_threshold(6, 2) == 36);
  CHECK(locked_threshold(24, 100) == std::numeric_limits<std::uint64_t>::max());
}

TEST_CASE("locked_number_oracle examples") {
  CHECK(locked_number_oracle(mk4()) == LockedNumbers{4, 3, 6, 6});
  CHECK(locked_number_oracle(uniform(2, 4)) == LockedNumbers{0, 2, 4, 4});
  CHECK(locked_number_oracle(catalog_get("W3").matroid) ==
        LockedNumbers{3, 3, 6, 6});
}

TEST_CASE("locked sets are closed on both sides") {
  for (const auto& [name, m] : lmtest::catalog_pool()) {
    CAPTURE(name);
    const Matroid d = dual(m);
    for (const Subset l : enumerate_locked(m)) {
      CHECK(is_closed(m, l));
      CHECK(is_closed(d, l.complement(m.size())));
    }
  }
}

TEST_CASE("locked sets of a direct sum are the union over summands") {
  const std::vector<std::pair<Matroid, Matroid>> pairs = {
      {mk4(), uniform(2, 4)},
      {catalog_get("W3").matroid, uniform(1, 2)},
      {uniform(2, 3), catalog_get("P6").matroid},
  };
  for (const auto& [a, b] : pairs) {
    const Matroid s = lmtest::disjoint_sum(a, b);
    std::vector<Subset> expected = enumerate_locked(a);
    for (const Subset l : enumerate_locked(b)) {
      expected.push_back(Subset(l.bits() << a.size()));
    }
    sort_canonical(expected);
    CHECK(enumerate_locked(s) == expected);
    CHECK(locked_structure(s).locked == expected);
  }
}

TEST_CASE("locking is self-dual under complementation") {
  std::vector<lmtest::Named> pool = lmtest::catalog_pool();
  for (auto& g : lmtest::graphic_pool()) pool.push_back(std::move(g));
  for (const auto& [name, m] : pool) {
    CAPTURE(name);
    const Matroid d = dual(m);
    const Subset full = m.ground_mask();
    for (const Subset l : lmtest::all_subsets(m.size())) {
      if (l.empty() || l == full) continue;
      REQUIRE(is_locked(m, l) == is_locked(d, full - l));
    }
  }
}

TEST_CASE("uncapped enumeration and a huge k agree") {
  for (const auto& [name, m] : lmtest::catalog_pool()) {
    CAPTURE(name);
    const auto v = k_locked_oracle(m, 64);
    REQUIRE_FALSE(v.is_no());
    CHECK(v.structure->locked == enumerate_locked(m));
  }
}

TEST_CASE("component union and direct scan agree on connected input") {
  for (const auto& [name, m] : lmtest::graphic_pool()) {
    if (!is_connected(m)) continue;
    CAPTURE(name);
    CHECK(enumerate_locked(m) == enumerate_locked_direct(m));
  }
}
