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

#include "lockedmat/catalog.hpp"

#include <algorithm>
#include <numeric>
#include <regex>

#include "lockedmat/error.hpp"

namespace lockedmat {

Matroid uniform(int r, int n) {
  if (n < 1 || n > kMaxElements || r < 0 || r > n) {
    throw Error(ErrorKind::BadParameters,
                "U_{" + std::to_string(r) + "," + std::to_string(n) + "}");
  }
  std::vector<Subset> bases;
  for_each_combination(n, r, [&](Subset s) { bases.push_back(s); });
  return Matroid::build(GroundSet::numbered(n), std::move(bases),
                        Validation::Skip);
}

Matroid graphic(int vertices, const std::vector<Edge>& edges,
                std::vector<std::string> labels) {
  if (vertices < 1 || edges.empty()) {
    throw Error(ErrorKind::BadParameters, "graph needs vertices and edges");
  }
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertices || v >= vertices) {
      throw Error(ErrorKind::BadParameters, "edge endpoint out of range");
    }
  }
  if (labels.empty()) {
    for (std::size_t i = 0; i < edges.size(); ++i) {
      labels.push_back("e" + std::to_string(i));
    }
  }
  if (labels.size() != edges.size()) {
    throw Error(ErrorKind::BadParameters, "one label per edge required");
  }

  const int n = static_cast<int>(edges.size());
  std::vector<int> parent(vertices);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto spanning_forest = [&](Subset s) {
    std::iota(parent.begin(), parent.end(), 0);
    for (int i : s.elements()) {
      const int a = find(edges[i].first);
      const int b = find(edges[i].second);
      if (a == b) return false;
      parent[a] = b;
    }
    return true;
  };

  std::iota(parent.begin(), parent.end(), 0);
  for (auto [u, v] : edges) parent[find(u)] = find(v);
  for (int x = 1; x < vertices; ++x) {
    if (find(x) != find(0)) {
      throw Error(ErrorKind::DisconnectedGraph,
                  "spanning trees need a connected graph");
    }
  }

  std::vector<Subset> bases;
  for_each_combination(n, vertices - 1, [&](Subset s) {
    if (spanning_forest(s)) bases.push_back(s);
  });
  return Matroid::build(GroundSet(std::move(labels)), std::move(bases),
                        Validation::Skip);
}

bool is_circuit_hyperplane(const Matroid& m, Subset h) {
  m.require_within(h);
  if (h.size() != m.rank() || m.is_basis(h)) return false;
  if (m.rank(h) != m.rank() - 1) return false;
  for (int e : h.elements()) {
    if (!m.is_independent(h.without(e))) return false;
  }
  return is_closed(m, h);
}

Matroid relax(const Matroid& m, Subset h) {
  if (!is_circuit_hyperplane(m, h)) {
    throw Error(ErrorKind::NotCircuitHyperplane, m.ground().format(h));
  }
  std::vector<Subset> bases(m.bases().begin(), m.bases().end());
  bases.push_back(h);
  return Matroid::build(m.ground(), std::move(bases),
                        Validation::ExchangeAxiom);
}

Matroid two_sum(const Matroid& m1, int p1, const Matroid& m2, int p2) {
  if (m1.size() < 3 || m2.size() < 3) {
    throw Error(ErrorKind::BadParameters,
                "2-sum summands need at least 3 elements");
  }
  if (p1 < 0 || p1 >= m1.size() || p2 < 0 || p2 >= m2.size()) {
    throw Error(ErrorKind::BadParameters, "basepoint out of range");
  }
  auto degenerate = [](const Matroid& m, int p) {
    return m.loops().contains(p) || m.coloops().contains(p);
  };
  if (degenerate(m1, p1)) {
    throw Error(ErrorKind::BasepointDegenerate, m1.ground().label(p1));
  }
  if (degenerate(m2, p2)) {
    throw Error(ErrorKind::BasepointDegenerate, m2.ground().label(p2));
  }

  std::vector<std::string> labels;
  std::vector<int> left, right;
  for (int e = 0; e < m1.size(); ++e) {
    if (e == p1) continue;
    left.push_back(e);
    labels.push_back("L." + m1.ground().label(e));
  }
  for (int e = 0; e < m2.size(); ++e) {
    if (e == p2) continue;
    right.push_back(e);
    labels.push_back("R." + m2.ground().label(e));
  }
  auto place = [](Subset b, const std::vector<int>& keep, int offset) {
    Subset out;
    for (std::size_t i = 0; i < keep.size(); ++i) {
      if (b.contains(keep[i])) out = out.with(offset + static_cast<int>(i));
    }
    return out;
  };

  std::vector<Subset> bases;
  const int offset = static_cast<int>(left.size());
  for (Subset b1 : m1.bases()) {
    for (Subset b2 : m2.bases()) {
      if (b1.contains(p1) == b2.contains(p2)) continue;
      bases.push_back(place(b1, left, 0) | place(b2, right, offset));
    }
  }
  return Matroid::build(GroundSet(std::move(labels)), std::move(bases),
                        Validation::ExchangeAxiom);
}

namespace {

Matroid from_nonbases(std::vector<std::string> labels, int rank,
                      const std::vector<Subset>& nonbases) {
  const int n = static_cast<int>(labels.size());
  std::vector<Subset> bases;
  for_each_combination(n, rank, [&](Subset s) {
    if (std::find(nonbases.begin(), nonbases.end(), s) == nonbases.end()) {
      bases.push_back(s);
    }
  });
  return Matroid::build(GroundSet(std::move(labels)), std::move(bases),
                        Validation::ExchangeAxiom);
}

const std::vector<std::string> kK4Edges = {"ab", "ac", "ad", "bc", "bd", "cd"};

}  // namespace

std::vector<Subset> mk4_triangles() {
  // abc, abd, acd, bcd as edge-index triples.
  return {Subset(0b001011), Subset(0b010101), Subset(0b100110),
          Subset(0b111000)};
}

Matroid mk4() { return from_nonbases(kK4Edges, 3, mk4_triangles()); }

Matroid relaxation_chain(int count) {
  if (count < 0 || count > 4) {
    throw Error(ErrorKind::BadParameters, "M(K4) has four triangles");
  }
  Matroid m = mk4();
  const auto triangles = mk4_triangles();
  for (int i = 0; i < count; ++i) m = relax(m, triangles[i]);
  return m;
}

Matroid vamos() {
  std::vector<std::string> labels = {"a", "a'", "b", "b'",
                                     "c", "c'", "d", "d'"};
  const GroundSet g(labels);
  const std::vector<Subset> nonbases = {
      g.subset({"a", "a'", "b", "b'"}), g.subset({"a", "a'", "c", "c'"}),
      g.subset({"a", "a'", "d", "d'"}), g.subset({"b", "b'", "c", "c'"}),
      g.subset({"b", "b'", "d", "d'"})};
  return from_nonbases(std::move(labels), 4, nonbases);
}

std::vector<std::string> catalog_named() {
  return {"MK4", "W3", "Q6", "P6", "V8"};
}

CatalogEntry catalog_get(const std::string& name) {
  if (name == "MK4") return {name, mk4(), 4};
  if (name == "W3") return {name, relaxation_chain(1), 3};
  if (name == "Q6") return {name, relaxation_chain(2), 2};
  if (name == "P6") return {name, relaxation_chain(3), 1};
  if (name == "V8") return {name, vamos(), 5};
  static const std::regex uniform_name(R"(U_(\d{1,2})_(\d{1,2}))");
  std::smatch match;
  if (std::regex_match(name, match, uniform_name)) {
    const int r = std::stoi(match[1]);
    const int n = std::stoi(match[2]);
    if (n >= 1 && n <= kMaxElements && r <= n) {
      return {name, uniform(r, n), 0};
    }
  }
  throw Error(ErrorKind::UnknownName, name);
}

}  // namespace lockedmat
