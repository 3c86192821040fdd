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

#include "lockedmat/uniformity.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include "lockedmat/error.hpp"

namespace lockedmat {

std::string_view to_string(UniformityCondition c) {
  switch (c) {
    case UniformityCondition::I: return "(i)";
    case UniformityCondition::II: return "(ii)";
    case UniformityCondition::III: return "(iii)";
    case UniformityCondition::IV: return "(iv)";
    case UniformityCondition::V: return "(v)";
    case UniformityCondition::None: return "none";
  }
  return "?";
}

bool is_uniform_direct(const Matroid& m) {
  boost::multiprecision::cpp_int count = 1;
  const int n = m.size();
  const int r = m.rank();
  for (int i = 0; i < r; ++i) count = count * (n - i) / (i + 1);
  return count == m.bases().size();
}

UniformityVerdict test_uniformity(const Matroid& m,
                                  const LockedNumberOracle& oracle) {
  const int n = m.size();
  UniformityVerdict v;
  auto accept = [&](UniformityCondition c) {
    v.uniform = true;
    v.witness = c;
    return v;
  };

  try {
    v.inputs_used = oracle(m);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::LoopPresent &&
        e.kind() != ErrorKind::ColoopPresent) {
      throw;
    }
    v.note = std::string(to_string(e.kind())) +
             ": partition counts undefined, decided from r(M) and |E|";
    if (m.rank() == n) return accept(UniformityCondition::IV);
    if (m.rank() == 0) return accept(UniformityCondition::V);
    v.note = std::string(to_string(e.kind())) +
             " with 0 < r(M) < |E|: a uniform matroid has neither";
    return v;
  }

  const LockedNumbers& k = *v.inputs_used;
  if (k.rank_of_m == n) return accept(UniformityCondition::IV);
  if (k.rank_of_m == 0) return accept(UniformityCondition::V);
  if (k.parallel_count == 1) return accept(UniformityCondition::II);
  if (k.coparallel_count == 1) return accept(UniformityCondition::III);
  if (k.ell == 0 && k.parallel_count == n && k.coparallel_count == n) {
    return accept(UniformityCondition::I);
  }
  return v;
}

bool check_uniform_iff_unlocked(const Matroid& m) {
  if (!is_3_connected(m)) {
    throw Error(ErrorKind::Not3Connected,
                "the biconditional is stated for 3-connected matroids");
  }
  return is_uniform_direct(m) == enumerate_locked(m).empty();
}

}  // namespace lockedmat
