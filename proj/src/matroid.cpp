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

#include "lockedmat/matroid.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "lockedmat/error.hpp"

namespace lockedmat {
namespace {

// Packs the members of s that lie in x into consecutive low bits.
Subset compress(Subset s, Subset x) {
  Subset::Bits out = 0;
  int pos = 0;
  for (int e : x.elements()) {
    if (s.contains(e)) out |= Subset::Bits{1} << pos;
    ++pos;
  }
  return Subset(out);
}

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

// Components of the matroid on x whose rank function is rank_of. A maximal
// independent B ⊆ x is grown greedily; two elements share a component iff
// they are linked through fundamental circuits C(e, B).
template <class RankFn>
std::vector<Subset> components_by_circuits(Subset x, RankFn&& rank_of) {
  Subset basis;
  int basis_size = 0;
  for (int e : x.elements()) {
    if (rank_of(basis.with(e)) == basis_size + 1) {
      basis = basis.with(e);
      ++basis_size;
    }
  }
  UnionFind uf(kMaxElements);
  for (int e : (x - basis).elements()) {
    for (int b : basis.elements()) {
      if (rank_of(basis.without(b).with(e)) == basis_size) uf.unite(e, b);
    }
  }
  std::vector<Subset> out;
  std::vector<int> slot(kMaxElements, -1);
  for (int e : x.elements()) {
    const int root = uf.find(e);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[slot[root]] = out[slot[root]].with(e);
  }
  return out;
}

}  // namespace

Matroid Matroid::build(GroundSet ground, std::vector<Subset> bases,
                       Validation validation) {
  if (ground.size() == 0) {
    throw Error(ErrorKind::EmptyGroundSet, "matroid needs at least one element");
  }
  if (bases.empty()) {
    throw Error(ErrorKind::EmptyBasisFamily, "no bases given");
  }
  const Subset full = ground.full();
  for (Subset b : bases) {
    if (!b.is_subset_of(full)) {
      throw Error(ErrorKind::ForeignElement,
                  "basis mentions an element outside the ground set");
    }
  }
  const int r = bases.front().size();
  for (Subset b : bases) {
    if (b.size() != r) {
      throw Error(ErrorKind::UnequalBasisSizes,
                  ground.format(bases.front()) + " has " + std::to_string(r) +
                      " elements but " + ground.format(b) + " has " +
                      std::to_string(b.size()));
    }
  }
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());

  Matroid m;
  m.ground_ = std::move(ground);
  m.bases_ = std::move(bases);
  m.rank_ = r;
  const std::size_t table_bits = std::size_t{1} << m.ground_.size();
  m.basis_table_.assign((table_bits + 63) / 64, 0);
  for (Subset b : m.bases_) {
    m.basis_table_[b.bits() / 64] |= std::uint64_t{1} << (b.bits() % 64);
  }
  if (validation == Validation::ExchangeAxiom) check_exchange_axiom(m);
  return m;
}

void Matroid::require_within(Subset x) const {
  if (!x.is_subset_of(ground_mask())) {
    throw Error(ErrorKind::ForeignElement,
                "subset has elements outside the " +
                    std::to_string(size()) + "-element ground set");
  }
}

bool Matroid::is_basis(Subset s) const {
  if (!s.is_subset_of(ground_mask())) return false;
  return (basis_table_[s.bits() / 64] >> (s.bits() % 64)) & 1U;
}

bool Matroid::is_independent(Subset s) const {
  require_within(s);
  if (s.size() > rank_) return false;
  for (Subset b : bases_) {
    if (s.is_subset_of(b)) return true;
  }
  return false;
}

RankQueryResult Matroid::rank_query(Subset x) const {
  require_within(x);
  const int ceiling = std::min(x.size(), rank_);
  RankQueryResult best{-1, Subset()};
  for (Subset b : bases_) {
    const Subset meet = b & x;
    if (meet.size() > best.value) best = {meet.size(), meet};
    if (best.value == ceiling) break;
  }
  return best;
}

int Matroid::corank(Subset x) const {
  require_within(x);
  return x.size() - rank_ + rank(x.complement(size()));
}

Subset Matroid::loops() const {
  Subset in_some_basis;
  for (Subset b : bases_) in_some_basis = in_some_basis | b;
  return in_some_basis.complement(size());
}

Subset Matroid::coloops() const {
  Subset in_every_basis = ground_mask();
  for (Subset b : bases_) in_every_basis = in_every_basis & b;
  return in_every_basis;
}

void check_exchange_axiom(const Matroid& m) {
  const auto bases = m.bases();
  for (Subset b1 : bases) {
    for (Subset b2 : bases) {
      if (b1 == b2) continue;
      for (int e : (b1 - b2).elements()) {
        bool found = false;
        for (int f : (b2 - b1).elements()) {
          if (m.is_basis(b1.without(e).with(f))) {
            found = true;
            break;
          }
        }
        if (!found) {
          const GroundSet& g = m.ground();
          throw Error(ErrorKind::ExchangeAxiomViolated,
                      "B1=" + g.format(b1) + " B2=" + g.format(b2) +
                          " e=" + g.label(e));
        }
      }
    }
  }
}

Matroid dual(const Matroid& m) {
  std::vector<Subset> bases;
  bases.reserve(m.bases().size());
  for (Subset b : m.bases()) bases.push_back(b.complement(m.size()));
  return Matroid::build(m.ground(), std::move(bases), Validation::Skip);
}

Matroid restrict(const Matroid& m, Subset x) {
  m.require_within(x);
  if (x.empty()) {
    throw Error(ErrorKind::EmptyGroundSet, "restriction to the empty set");
  }
  const int rx = m.rank(x);
  std::vector<Subset> bases;
  for (Subset b : m.bases()) {
    if ((b & x).size() == rx) bases.push_back(compress(b & x, x));
  }
  return Matroid::build(GroundSet(m.ground().labels_of(x)), std::move(bases),
                        Validation::Skip);
}

Matroid contract(const Matroid& m, Subset x) {
  m.require_within(x);
  const Subset rest = x.complement(m.size());
  if (rest.empty()) {
    throw Error(ErrorKind::EmptyGroundSet, "contraction of the whole ground set");
  }
  return dual(restrict(dual(m), rest));
}

Matroid direct_sum(const Matroid& a, const Matroid& b) {
  std::vector<std::string> labels = a.ground().labels();
  labels.insert(labels.end(), b.ground().labels().begin(),
                b.ground().labels().end());
  std::vector<Subset> bases;
  for (Subset ba : a.bases()) {
    for (Subset bb : b.bases()) {
      bases.push_back(Subset(ba.bits() | (bb.bits() << a.size())));
    }
  }
  return Matroid::build(GroundSet(std::move(labels)), std::move(bases),
                        Validation::Skip);
}

Subset closure(const Matroid& m, Subset x) {
  const int rx = m.rank(x);
  Subset out = x;
  for (int e : x.complement(m.size()).elements()) {
    if (m.rank(x.with(e)) == rx) out = out.with(e);
  }
  return out;
}

bool is_closed(const Matroid& m, Subset x) { return closure(m, x) == x; }

std::vector<Subset> restriction_components(const Matroid& m, Subset x) {
  m.require_within(x);
  return components_by_circuits(x, [&](Subset s) { return m.rank(s); });
}

std::vector<Subset> dual_restriction_components(const Matroid& m, Subset x) {
  m.require_within(x);
  return components_by_circuits(x, [&](Subset s) { return m.corank(s); });
}

bool restriction_connected(const Matroid& m, Subset x) {
  return !x.empty() && restriction_components(m, x).size() == 1;
}

bool dual_restriction_connected(const Matroid& m, Subset x) {
  return !x.empty() && dual_restriction_components(m, x).size() == 1;
}

std::vector<Subset> components(const Matroid& m) {
  return restriction_components(m, m.ground_mask());
}

bool is_connected(const Matroid& m) { return components(m).size() == 1; }

bool is_connected_exhaustive(const Matroid& m) {
  const Subset full = m.ground_mask();
  const Subset::Bits first = Subset::Bits{1};
  // Separators come in complementary pairs; fixing element 0 on one side
  // halves the scan.
  for (Subset::Bits bits = 1; bits < full.bits(); ++bits) {
    if (!(bits & first)) continue;
    const Subset x(bits);
    if (m.rank(x) + m.rank(full - x) == m.rank()) return false;
  }
  return true;
}

bool is_3_connected(const Matroid& m) {
  if (!is_connected(m)) return false;
  const int n = m.size();
  if (n < 4) return true;
  const Subset full = m.ground_mask();
  for (Subset::Bits bits = 1; bits < full.bits(); bits += 2) {
    const Subset x(bits);
    if (x.size() < 2 || n - x.size() < 2) continue;
    if (m.rank(x) + m.rank(full - x) <= m.rank() + 1) return false;
  }
  return true;
}

std::vector<Subset> parallel_closures(const Matroid& m) {
  const Subset loops = m.loops();
  if (!loops.empty()) {
    throw Error(ErrorKind::LoopPresent, m.ground().label(loops.lowest()));
  }
  std::vector<Subset> out;
  Subset seen;
  for (int e = 0; e < m.size(); ++e) {
    if (seen.contains(e)) continue;
    Subset cls;
    for (int f = 0; f < m.size(); ++f) {
      if (m.rank(Subset::singleton(e).with(f)) == 1) cls = cls.with(f);
    }
    out.push_back(cls);
    seen = seen | cls;
  }
  return out;
}

std::vector<Subset> coparallel_closures(const Matroid& m) {
  const Subset coloops = m.coloops();
  if (!coloops.empty()) {
    throw Error(ErrorKind::ColoopPresent, m.ground().label(coloops.lowest()));
  }
  std::vector<Subset> out;
  Subset seen;
  for (int e = 0; e < m.size(); ++e) {
    if (seen.contains(e)) continue;
    Subset cls;
    for (int f = 0; f < m.size(); ++f) {
      if (m.corank(Subset::singleton(e).with(f)) == 1) cls = cls.with(f);
    }
    out.push_back(cls);
    seen = seen | cls;
  }
  return out;
}

}  // namespace lockedmat
