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

#include "lockedmat/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "lockedmat/error.hpp"
#include "lockedmat/locked.hpp"

namespace lockedmat {

std::string_view to_string(Sense sense) {
  switch (sense) {
    case Sense::LessEq: return "<=";
    case Sense::GreaterEq: return ">=";
    case Sense::Equal: return "=";
  }
  return "?";
}

std::string_view to_string(ConstraintOrigin origin) {
  switch (origin) {
    case ConstraintOrigin::Nonnegativity: return "nonnegativity";
    case ConstraintOrigin::ParallelUpper: return "parallel";
    case ConstraintOrigin::CoparallelLower: return "coparallel";
    case ConstraintOrigin::LockedUpper: return "locked";
    case ConstraintOrigin::RankUpper: return "rank";
    case ConstraintOrigin::RankEquality: return "equality";
  }
  return "?";
}

LinearConstraint LinearConstraint::over(int n, Subset s, Sense sense,
                                        std::int64_t rhs,
                                        ConstraintOrigin origin) {
  LinearConstraint c;
  c.coeffs.assign(n, 0);
  for (int e : s.elements()) c.coeffs[e] = 1;
  c.sense = sense;
  c.rhs = rhs;
  c.origin = origin;
  return c;
}

Subset LinearConstraint::support() const {
  Subset s;
  for (std::size_t e = 0; e < coeffs.size(); ++e) {
    if (coeffs[e] != 0) s = s.with(static_cast<int>(e));
  }
  return s;
}

std::int64_t LinearConstraint::evaluate(Subset vertex) const {
  std::int64_t total = 0;
  for (int e : vertex.elements()) total += coeffs.at(e);
  return total;
}

Rational LinearConstraint::evaluate(std::span<const Rational> x) const {
  Rational total = 0;
  for (std::size_t e = 0; e < coeffs.size(); ++e) {
    if (coeffs[e] != 0) total += coeffs[e] * x[e];
  }
  return total;
}

bool LinearConstraint::satisfied_by(Subset vertex) const {
  const auto lhs = evaluate(vertex);
  switch (sense) {
    case Sense::LessEq: return lhs <= rhs;
    case Sense::GreaterEq: return lhs >= rhs;
    case Sense::Equal: return lhs == rhs;
  }
  return false;
}

bool LinearConstraint::tight_at(Subset vertex) const {
  return evaluate(vertex) == rhs;
}

std::string format_constraint(const LinearConstraint& c, const GroundSet& g) {
  std::string out;
  for (std::size_t e = 0; e < c.coeffs.size(); ++e) {
    const std::int64_t a = c.coeffs[e];
    if (a == 0) continue;
    const std::string term = "x(" + g.label(static_cast<int>(e)) + ")";
    const std::int64_t mag = a < 0 ? -a : a;
    const std::string body =
        mag == 1 ? term : std::to_string(mag) + " " + term;
    if (out.empty()) {
      out = a < 0 ? "-" + body : body;
    } else {
      out += a < 0 ? " - " : " + ";
      out += body;
    }
  }
  if (out.empty()) out = "0";
  out += " ";
  out += to_string(c.sense);
  out += " " + std::to_string(c.rhs);
  return out;
}

FacetSystem predicted_facets_bases(const Matroid& m) {
  const auto parallel = parallel_closures(m);
  const auto series = coparallel_closures(m);
  if (!is_connected(m)) {
    throw Error(ErrorKind::NotConnected,
                "bases polytope description needs a connected matroid");
  }
  const int n = m.size();
  const Subset full = m.ground_mask();

  FacetSystem out;
  out.equality = LinearConstraint::over(n, full, Sense::Equal, m.rank(),
                                        ConstraintOrigin::RankEquality);
  auto add = [&](LinearConstraint c) {
    if (c.support() == full) {
      out.collapsed.push_back(std::move(c));
    } else {
      out.facets.push_back(std::move(c));
    }
  };
  for (Subset p : parallel) {
    add(LinearConstraint::over(n, p, Sense::LessEq, 1,
                               ConstraintOrigin::ParallelUpper));
  }
  for (Subset s : series) {
    add(LinearConstraint::over(n, s, Sense::GreaterEq, s.size() - 1,
                               s.size() == 1
                                   ? ConstraintOrigin::Nonnegativity
                                   : ConstraintOrigin::CoparallelLower));
  }
  for (Subset l : enumerate_locked(m)) {
    add(LinearConstraint::over(n, l, Sense::LessEq, m.rank(l),
                               ConstraintOrigin::LockedUpper));
  }
  return out;
}

FacetSystem predicted_facets_independence(const Matroid& m) {
  const Subset loops = m.loops();
  if (!loops.empty()) {
    throw Error(ErrorKind::LoopPresent, m.ground().label(loops.lowest()));
  }
  const int n = m.size();
  FacetSystem out;
  for (int e = 0; e < n; ++e) {
    out.facets.push_back(LinearConstraint::over(
        n, Subset::singleton(e), Sense::GreaterEq, 0,
        ConstraintOrigin::Nonnegativity));
  }
  for_each_subset_canonical(n, [&](Subset a) {
    if (a.empty()) return true;
    if (is_closed(m, a) && restriction_connected(m, a)) {
      out.facets.push_back(LinearConstraint::over(
          n, a, Sense::LessEq, m.rank(a), ConstraintOrigin::RankUpper));
    }
    return true;
  });
  return out;
}

TightSet tight_set(const LinearConstraint& c,
                   std::span<const Subset> vertices) {
  TightSet out;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (c.tight_at(vertices[i])) out.push_back(static_cast<std::uint32_t>(i));
  }
  return out;
}

namespace {

// Rank of an integer matrix by Bareiss elimination. Every intermediate entry
// is a minor of the input, so the division by the previous pivot is exact.
int integer_rank(std::vector<std::vector<std::int64_t>> a, int cols) {
  const int rows = static_cast<int>(a.size());
  int rank = 0;
  std::int64_t prev = 1;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int i = rank; i < rows; ++i) {
      if (a[i][col] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(a[rank], a[pivot]);
    const __int128 p = a[rank][col];
    for (int i = rank + 1; i < rows; ++i) {
      const __int128 f = a[i][col];
      for (int j = col + 1; j < cols; ++j) {
        const __int128 num = p * a[i][j] - f * a[rank][j];
        a[i][j] = static_cast<std::int64_t>(num / prev);
      }
      a[i][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

int dimension_of(const TightSet& tight, std::span<const Subset> vertices,
                 int n) {
  std::vector<Subset> pts;
  pts.reserve(tight.size());
  for (auto i : tight) pts.push_back(vertices[i]);
  return polytope_dimension(pts, n);
}

std::vector<OracleFacet> oracle_facets(const Matroid& m,
                                       std::span<const Subset> vertices) {
  const int n = m.size();
  const int dim = polytope_dimension(vertices, n);
  std::map<TightSet, bool> facet_cache;
  std::vector<OracleFacet> out;
  std::set<TightSet> seen;

  auto consider = [&](LinearConstraint c) {
    TightSet t = tight_set(c, vertices);
    if (t.empty()) return;
    auto it = facet_cache.find(t);
    if (it == facet_cache.end()) {
      it = facet_cache.emplace(t, dimension_of(t, vertices, n) == dim - 1)
               .first;
    }
    if (it->second && seen.insert(t).second) {
      out.push_back({std::move(t), std::move(c)});
    }
  };
  for (int e = 0; e < n; ++e) {
    consider(LinearConstraint::over(n, Subset::singleton(e), Sense::GreaterEq,
                                    0, ConstraintOrigin::Nonnegativity));
  }
  for_each_subset_canonical(n, [&](Subset a) {
    if (!a.empty()) {
      consider(LinearConstraint::over(n, a, Sense::LessEq, m.rank(a),
                                      ConstraintOrigin::RankUpper));
    }
    return true;
  });
  std::sort(out.begin(), out.end(),
            [](const OracleFacet& x, const OracleFacet& y) {
              return x.tight < y.tight;
            });
  return out;
}

CertificationReport compare(const Matroid& m, const FacetSystem& predicted,
                            std::span<const Subset> vertices,
                            PolytopeKind kind) {
  const int n = m.size();
  CertificationReport report;
  report.kind = kind;
  report.vertex_count = vertices.size();
  report.dimension = polytope_dimension(vertices, n);
  report.predicted_count = predicted.facets.size();
  report.collapsed = predicted.collapsed;

  const auto oracle = kind == PolytopeKind::Bases
                          ? oracle_facets_bases(m)
                          : oracle_facets_independence(m);
  report.oracle_count = oracle.size();
  std::set<TightSet> oracle_sets;
  for (const auto& f : oracle) oracle_sets.insert(f.tight);

  std::set<TightSet> predicted_sets;
  for (const auto& c : predicted.facets) {
    TightSet t = tight_set(c, vertices);
    if (!oracle_sets.count(t)) {
      report.extra.push_back(c);
    } else if (!predicted_sets.insert(t).second) {
      report.duplicates.push_back(c);
    } else {
      ++report.matched;
    }
  }
  for (const auto& f : oracle) {
    if (!predicted_sets.count(f.tight)) report.missing.push_back(f);
  }
  std::stable_sort(report.missing.begin(), report.missing.end(),
                   [](const OracleFacet& x, const OracleFacet& y) {
                     if (x.witness.origin != y.witness.origin) {
                       return x.witness.origin < y.witness.origin;
                     }
                     return canonical_less(x.witness.support(),
                                           y.witness.support());
                   });
  return report;
}

}  // namespace

int polytope_dimension(std::span<const Subset> vertices, int n) {
  if (vertices.empty()) {
    throw Error(ErrorKind::BadParameters, "dimension of an empty vertex set");
  }
  std::vector<std::vector<std::int64_t>> rows;
  rows.reserve(vertices.size() - 1);
  const Subset origin = vertices.front();
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    std::vector<std::int64_t> row(n);
    for (int e = 0; e < n; ++e) {
      row[e] = static_cast<std::int64_t>(vertices[i].contains(e)) -
               static_cast<std::int64_t>(origin.contains(e));
    }
    rows.push_back(std::move(row));
  }
  return integer_rank(std::move(rows), n);
}

std::vector<Subset> independent_sets(const Matroid& m) {
  std::vector<Subset> out;
  const Subset::Bits limit = m.ground_mask().bits();
  for (Subset::Bits bits = 0;; ++bits) {
    const Subset s(bits);
    if (s.size() <= m.rank()) {
      for (Subset b : m.bases()) {
        if (s.is_subset_of(b)) {
          out.push_back(s);
          break;
        }
      }
    }
    if (bits == limit) break;
  }
  return out;
}

std::vector<OracleFacet> oracle_facets_bases(const Matroid& m) {
  if (m.bases().size() < 2) {
    throw Error(ErrorKind::DegeneratePolytope,
                "a single basis spans a 0-dimensional polytope");
  }
  return oracle_facets(m, m.bases());
}

std::vector<OracleFacet> oracle_facets_independence(const Matroid& m) {
  const auto vertices = independent_sets(m);
  return oracle_facets(m, vertices);
}

void CertificationReport::require_passed(const GroundSet& g) const {
  if (passed()) return;
  std::string detail;
  for (const auto& c : extra) {
    detail += " extra[" + format_constraint(c, g) + "]";
  }
  for (const auto& c : duplicates) {
    detail += " duplicate[" + format_constraint(c, g) + "]";
  }
  for (const auto& f : missing) {
    detail += " missing[" + format_constraint(f.witness, g) + "]";
  }
  for (Subset a : lemma_violations) {
    detail += " lemma[" + g.format(a) + "]";
  }
  throw Error(ErrorKind::CertificationFailed, detail);
}

CertificationReport certify(const Matroid& m) {
  const FacetSystem predicted = predicted_facets_bases(m);
  const auto vertices = m.bases();
  CertificationReport report =
      compare(m, predicted, vertices, PolytopeKind::Bases);

  const int n = m.size();
  const Subset full = m.ground_mask();
  for_each_subset_canonical(n, [&](Subset a) {
    if (a.empty() || a == full) return true;
    if (!is_closed(m, a) || !restriction_connected(m, a)) return true;
    if (dual_restriction_connected(m, full - a)) return true;
    const auto c = LinearConstraint::over(n, a, Sense::LessEq, m.rank(a),
                                          ConstraintOrigin::RankUpper);
    const TightSet t = tight_set(c, vertices);
    if (dimension_of(t, vertices, n) == report.dimension - 1) {
      report.lemma_violations.push_back(a);
    }
    return true;
  });
  return report;
}

CertificationReport certify_independence(const Matroid& m) {
  const FacetSystem predicted = predicted_facets_independence(m);
  const auto vertices = independent_sets(m);
  return compare(m, predicted, vertices, PolytopeKind::Independence);
}

SeparationResult separate(const FacetSystem& system,
                          std::span<const Rational> x) {
  std::size_t n = 0;
  if (system.equality) {
    n = system.equality->coeffs.size();
  } else if (!system.facets.empty()) {
    n = system.facets.front().coeffs.size();
  }
  if (x.size() != n) {
    throw Error(ErrorKind::DimensionMismatch,
                "point has " + std::to_string(x.size()) +
                    " coordinates, system has " + std::to_string(n));
  }

  SeparationResult result;
  auto check = [&](const LinearConstraint& c) {
    ++result.constraints_checked;
    const Rational lhs = c.evaluate(x);
    const Rational rhs = c.rhs;
    Rational excess;
    switch (c.sense) {
      case Sense::LessEq: excess = lhs - rhs; break;
      case Sense::GreaterEq: excess = rhs - lhs; break;
      case Sense::Equal: excess = lhs > rhs ? lhs - rhs : rhs - lhs; break;
    }
    if (excess > 0 && (!result.violated || excess > result.violation)) {
      result.violated = c;
      result.violation = excess;
    }
  };
  if (system.equality) check(*system.equality);
  for (const auto& c : system.facets) check(c);
  return result;
}

}  // namespace lockedmat
