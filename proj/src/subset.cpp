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

#include "lockedmat/subset.hpp"

#include <algorithm>

#include "lockedmat/error.hpp"

namespace lockedmat {

std::vector<int> Subset::elements() const {
  std::vector<int> out;
  out.reserve(size());
  for (Bits rest = bits_; rest != 0; rest &= rest - 1) {
    out.push_back(std::countr_zero(rest));
  }
  return out;
}

void sort_canonical(std::vector<Subset>& sets) {
  std::sort(sets.begin(), sets.end(), CanonicalLess{});
}

void for_each_combination(int n, int k,
                          const std::function<void(Subset)>& fn) {
  if (k < 0 || k > n) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    Subset::Bits bits = 0;
    for (int i : idx) bits |= Subset::Bits{1} << i;
    fn(Subset(bits));
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

void for_each_subset_canonical(int n, const std::function<bool(Subset)>& fn) {
  for (int k = 0; k <= n; ++k) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      Subset::Bits bits = 0;
      for (int i : idx) bits |= Subset::Bits{1} << i;
      if (!fn(Subset(bits))) return;
      int i = k - 1;
      while (i >= 0 && idx[i] == n - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
}

GroundSet::GroundSet(std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  if (labels_.size() > static_cast<std::size_t>(kMaxElements)) {
    throw Error(ErrorKind::GroundSetTooLarge,
                std::to_string(labels_.size()) + " elements, cap is " +
                    std::to_string(kMaxElements));
  }
  for (int i = 0; i < size(); ++i) {
    if (labels_[i].empty()) {
      throw Error(ErrorKind::ParseError, "empty element label");
    }
    if (!index_.emplace(labels_[i], i).second) {
      throw Error(ErrorKind::DuplicateLabel, labels_[i]);
    }
  }
}

GroundSet GroundSet::numbered(int n) {
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return GroundSet(std::move(labels));
}

int GroundSet::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw Error(ErrorKind::ForeignElement, label);
  return it->second;
}

Subset GroundSet::subset(std::span<const std::string> labels) const {
  Subset s;
  for (const auto& l : labels) s = s.with(index_of(l));
  return s;
}

Subset GroundSet::subset(std::initializer_list<std::string> labels) const {
  return subset(std::span<const std::string>(labels.begin(), labels.size()));
}

std::vector<std::string> GroundSet::labels_of(Subset s) const {
  std::vector<std::string> out;
  for (int e : s.elements()) out.push_back(label(e));
  return out;
}

std::string GroundSet::format(Subset s) const {
  std::string out = "{";
  bool first = true;
  for (int e : s.elements()) {
    if (!first) out += ",";
    out += label(e);
    first = false;
  }
  return out + "}";
}

}  // namespace lockedmat
