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

#include "lockedmat/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "lockedmat/error.hpp"

namespace lockedmat {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& what) {
  throw Error(ErrorKind::ParseError, what);
}

Subset parse_set(const json& j, const GroundSet& g, int rank) {
  if (!j.is_array()) fail("each listed set must be an array of labels");
  Subset s;
  for (const auto& item : j) {
    if (!item.is_string()) fail("labels must be strings");
    const int e = g.index_of(item.get<std::string>());
    if (s.contains(e)) fail("label repeated within a set: " + g.label(e));
    s = s.with(e);
  }
  if (s.size() != rank) {
    fail("set " + g.format(s) + " has " + std::to_string(s.size()) +
         " elements, rank is " + std::to_string(rank));
  }
  return s;
}

}  // namespace

MatroidFile parse_matroid_file(const std::string& text,
                               Validation validation) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    fail(e.what());
  }
  if (!doc.is_object()) fail("top level must be an object");

  std::string name;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) fail("name must be a string");
    name = doc["name"].get<std::string>();
  }
  if (!doc.contains("ground_set") || !doc["ground_set"].is_array()) {
    fail("missing ground_set array");
  }
  std::vector<std::string> labels;
  for (const auto& item : doc["ground_set"]) {
    if (!item.is_string()) fail("ground_set labels must be strings");
    labels.push_back(item.get<std::string>());
  }
  if (!doc.contains("rank") || !doc["rank"].is_number_integer()) {
    fail("missing integer rank");
  }
  const auto rank = doc["rank"].get<long long>();
  if (rank < 0 || rank > static_cast<long long>(labels.size())) {
    fail("rank out of range");
  }
  const bool has_bases = doc.contains("bases");
  const bool has_nonbases = doc.contains("nonbases");
  if (has_bases == has_nonbases) {
    fail("exactly one of bases or nonbases is required");
  }

  GroundSet ground(std::move(labels));
  const int r = static_cast<int>(rank);
  const json& listed = has_bases ? doc["bases"] : doc["nonbases"];
  if (!listed.is_array()) fail("bases/nonbases must be an array");
  std::vector<Subset> sets;
  for (const auto& item : listed) sets.push_back(parse_set(item, ground, r));

  std::vector<Subset> bases;
  if (has_bases) {
    bases = std::move(sets);
  } else {
    const std::set<Subset> excluded(sets.begin(), sets.end());
    for_each_combination(ground.size(), r, [&](Subset s) {
      if (!excluded.count(s)) bases.push_back(s);
    });
  }
  return {std::move(name),
          Matroid::build(std::move(ground), std::move(bases), validation)};
}

MatroidFile load_matroid_file(const std::string& path, Validation validation) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matroid_file(buf.str(), validation);
}

std::string emit_matroid_file(const MatroidFile& file, FileEncoding encoding) {
  const Matroid& m = file.matroid;
  const GroundSet& g = m.ground();
  std::vector<Subset> listed;
  if (encoding == FileEncoding::Bases) {
    listed.assign(m.bases().begin(), m.bases().end());
  } else {
    for_each_combination(m.size(), m.rank(), [&](Subset s) {
      if (!m.is_basis(s)) listed.push_back(s);
    });
  }
  sort_canonical(listed);

  // One set per line keeps the files diffable.
  std::string out = "{\n";
  out += "  \"name\": " + json(file.name).dump() + ",\n";
  out += "  \"ground_set\": " + json(g.labels()).dump() + ",\n";
  out += "  \"rank\": " + std::to_string(m.rank()) + ",\n";
  out += "  \"";
  out += encoding == FileEncoding::Bases ? "bases" : "nonbases";
  out += "\": [";
  for (std::size_t i = 0; i < listed.size(); ++i) {
    out += i == 0 ? "\n    " : ",\n    ";
    out += json(g.labels_of(listed[i])).dump();
  }
  out += listed.empty() ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

void save_matroid_file(const MatroidFile& file, const std::string& path,
                       FileEncoding encoding) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::IoError, "cannot write " + path);
  out << emit_matroid_file(file, encoding);
  if (!out) throw Error(ErrorKind::IoError, "write failed for " + path);
}

}  // namespace lockedmat
