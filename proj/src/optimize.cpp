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

#include "lockedmat/optimize.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "lockedmat/error.hpp"

namespace lockedmat {
namespace {

void require_weights(const Matroid& m, const WeightFunction& c) {
  if (c.size() != static_cast<std::size_t>(m.size())) {
    throw Error(ErrorKind::DimensionMismatch,
                std::to_string(c.size()) + " weights for " +
                    std::to_string(m.size()) + " elements");
  }
}

Rational weight_of(Subset s, const WeightFunction& c) {
  Rational total = 0;
  for (int e : s.elements()) total += c[e];
  return total;
}

WeightFunction characteristic(const Matroid& m, Subset x) {
  WeightFunction c(m.size(), Rational(0));
  for (int e : x.elements()) c[e] = 1;
  return c;
}

}  // namespace

OptimizationResult greedy_max_basis(const Matroid& m, const WeightFunction& c,
                                    Subset preferred) {
  require_weights(m, c);
  m.require_within(preferred);
  std::vector<int> order(m.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (c[a] != c[b]) return c[a] > c[b];
    if (preferred.contains(a) != preferred.contains(b)) {
      return preferred.contains(a);
    }
    return a < b;
  });

  OptimizationResult result;
  for (int e : order) {
    const bool accept = result.basis.size() < m.rank() &&
                        m.is_independent(result.basis.with(e));
    result.trace.push_back({e, accept});
    if (accept) result.basis = result.basis.with(e);
  }
  result.value = weight_of(result.basis, c);
  return result;
}

OptimizationResult brute_force_max_basis(const Matroid& m,
                                         const WeightFunction& c) {
  require_weights(m, c);
  OptimizationResult best;
  bool have = false;
  for (Subset b : m.bases()) {
    const Rational v = weight_of(b, c);
    if (!have || v > best.value ||
        (v == best.value && canonical_less(b, best.basis))) {
      best.basis = b;
      best.value = v;
      have = true;
    }
  }
  return best;
}

int rank_via_optimization(const Matroid& m, Subset x) {
  m.require_within(x);
  const auto result = greedy_max_basis(m, characteristic(m, x), x);
  return boost::multiprecision::numerator(result.value).convert_to<int>();
}

bool independent_via_optimization(const Matroid& m, Subset x) {
  m.require_within(x);
  const auto result = greedy_max_basis(m, characteristic(m, x), x);
  return x.is_subset_of(result.basis);
}

}  // namespace lockedmat
