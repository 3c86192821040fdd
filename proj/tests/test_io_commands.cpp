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

#include <sstream>

#include "lockedmat/commands.hpp"
#include "lockedmat/io.hpp"
#include "support.hpp"

using namespace lockedmat;
using lmtest::kind_of;
using nlohmann::json;

namespace {

std::string fixture(const std::string& rel) {
  return std::string(LOCKEDMAT_FIXTURE_DIR) + "/" + rel;
}

MatroidFile load(const std::string& name) {
  return load_matroid_file(fixture("matroids/" + name + ".json"));
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json results_of(const Report& r) { return json::parse(r.json)["results"]; }

}  // namespace

TEST_CASE("file round trip for every catalog matroid") {
  for (const auto& [name, m] : lmtest::catalog_pool()) {
    CAPTURE(name);
    const MatroidFile f{name, m};
    for (auto enc : {FileEncoding::Bases, FileEncoding::Nonbases}) {
      const std::string text = emit_matroid_file(f, enc);
      const MatroidFile back = parse_matroid_file(text);
      CHECK(back.name == name);
      CHECK(back.matroid == m);
      CHECK(emit_matroid_file(back, enc) == text);
    }
  }
}

TEST_CASE("bases and nonbases encodings load identically") {
  CHECK(load("MK4").matroid == load("MK4_nonbases").matroid);
  CHECK(load("MK4").matroid == mk4());
  for (const auto& name : catalog_named()) {
    CAPTURE(name);
    CHECK(load(name).matroid == catalog_get(name).matroid);
  }
}

TEST_CASE("malformed files are rejected") {
  CHECK(kind_of([] { (void)load("malformed"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { (void)load("MK4_corrupted"); }) ==
        ErrorKind::ExchangeAxiomViolated);
  CHECK_NOTHROW(load_matroid_file(fixture("matroids/MK4_corrupted.json"),
                                  Validation::Skip));
  CHECK(kind_of([] { (void)load("does_not_exist"); }) == ErrorKind::IoError);

  const std::string head =
      R"({"name": "t", "ground_set": ["a", "b", "c"], "rank": 2, )";
  CHECK(kind_of([&] {
          (void)parse_matroid_file(head + R"("bases": [["a", "b"]],
                                             "nonbases": [["a", "c"]]})");
        }) == ErrorKind::ParseError);
  CHECK(kind_of([&] { (void)parse_matroid_file(head + "\"x\": 1}"); }) ==
        ErrorKind::ParseError);
  CHECK(kind_of([&] {
          (void)parse_matroid_file(head + R"("bases": [["a"]]})");
        }) == ErrorKind::ParseError);
  CHECK(kind_of([&] {
          (void)parse_matroid_file(head + R"("bases": [["a", "z"]]})");
        }) == ErrorKind::ForeignElement);
  CHECK(kind_of([&] {
          (void)parse_matroid_file(
              R"({"name": "t", "ground_set": ["a", "a"], "rank": 1,
                  "bases": [["a"]]})");
        }) == ErrorKind::DuplicateLabel);
  CHECK(kind_of([&] {
          (void)parse_matroid_file(head + R"("nonbases": [["a", "b"],
              ["a", "c"], ["b", "c"]]})");
        }) == ErrorKind::EmptyBasisFamily);
}

TEST_CASE("report json re-emits identically") {
  const auto mk4f = load("MK4");
  const std::vector<Report> reports = {
      run_info(mk4f),
      run_locked(mk4f, std::nullopt),
      run_locked(mk4f, 1),
      run_facets(mk4f, PolytopeKind::Bases),
      run_facets(mk4f, PolytopeKind::Independence),
      run_certify(mk4f, PolytopeKind::Bases),
      run_mwbp(mk4f, {"5", "4", "3", "2", "1", "0"}),
      run_uniform(mk4f)};
  for (const auto& r : reports) {
    CAPTURE(r.command);
    const json doc = json::parse(r.json);
    CHECK(doc.dump(2) + "\n" == r.json);
    CHECK(json::parse(doc.dump()) == doc);
    CHECK(doc["command"] == r.command);
    CHECK(doc.contains("inputs"));
    CHECK(doc.contains("results"));
    CHECK(doc["timing"]["seconds"].is_number());
    CHECK(r.text.find("seconds") == std::string::npos);
  }
}

TEST_CASE("info command") {
  const auto r = results_of(run_info(load("MK4")));
  CHECK(r["rank"] == 3);
  CHECK(r["bases"] == 16);
  CHECK(r["connected"] == true);
  CHECK(r["three_connected"] == true);
  CHECK(r["loops"].empty());
  CHECK(results_of(run_info(load("U_2_4")))["bases"] == 6);
  CHECK(run_info(load("MK4")).text == slurp(fixture("golden/MK4_info.txt")));
}

TEST_CASE("locked command") {
  const auto mk4f = load("MK4");
  const auto r = results_of(run_locked(mk4f, std::nullopt));
  CHECK(r["locked_number"] == 4);
  CHECK(r["locked"].size() == 4);
  const auto k0 = run_locked(mk4f, 0);
  CHECK(results_of(k0)["verdict"] == "No");
  CHECK(k0.exit_code == kExitOk);
  CHECK(results_of(run_locked(load("U_2_4"), std::nullopt))["locked_number"] ==
        0);
  CHECK(run_locked(load("V8"), std::nullopt).text ==
        slurp(fixture("golden/V8_locked.txt")));
}

TEST_CASE("facets command") {
  const auto mk4r = run_facets(load("MK4"), PolytopeKind::Bases);
  CHECK(results_of(mk4r)["facet_count"] == 16);
  CHECK(results_of(mk4r)["equality"]["constraint"] ==
        "x(ab) + x(ac) + x(ad) + x(bc) + x(bd) + x(cd) = 3");
  CHECK(mk4r.text == slurp(fixture("golden/MK4_facets.txt")));
  const auto u = run_facets(load("U_2_4"), PolytopeKind::Bases);
  CHECK(results_of(u)["facet_count"] == 8);
  CHECK(u.text == slurp(fixture("golden/U_2_4_facets.txt")));
  CHECK(results_of(run_facets(load("V8"), PolytopeKind::Bases))["facet_count"] ==
        21);
  CHECK(run_facets(load("U_2_4"), PolytopeKind::Independence).text ==
        slurp(fixture("golden/U_2_4_independence.txt")));
}

TEST_CASE("certify command") {
  for (const auto& name : catalog_named()) {
    CAPTURE(name);
    const auto r = run_certify(load(name), PolytopeKind::Bases);
    CHECK(r.exit_code == kExitOk);
    CHECK(r.text.find("result     PASS") != std::string::npos);
  }
  // predicted system is empty after both collapses; the oracle has two facets
  const auto u12 = run_certify(load("U_1_2"), PolytopeKind::Bases);
  CHECK(u12.exit_code == kExitMismatch);
  CHECK(results_of(u12)["passed"] == false);
  CHECK(results_of(u12)["collapsed"].size() == 2);
  CHECK(u12.text.find("degenerate collapse") != std::string::npos);
}

TEST_CASE("mwbp command") {
  const auto mk4f = load("MK4");
  const auto r = results_of(run_mwbp(mk4f, split_csv("5,4,3,2,1,0")));
  CHECK(r["value"] == "12");
  CHECK(r["basis"] == json::array({"ab", "ac", "ad"}));
  CHECK(r["trace"].size() == 6);
  CHECK(results_of(run_mwbp(mk4f, split_csv("0,0,0,0,0,0")))["value"] == "0");
  CHECK(results_of(run_mwbp(mk4f, split_csv("1/2,-1,0.25,0,0,0")))["value"] ==
        "3/4");
  CHECK(kind_of([&] { (void)run_mwbp(mk4f, split_csv("1,2")); }) ==
        ErrorKind::DimensionMismatch);
  CHECK(kind_of([&] { (void)run_mwbp(mk4f, split_csv("1,2,,4,5,6")); }) ==
        ErrorKind::ParseError);
}

TEST_CASE("uniform command") {
  const auto u = run_uniform(load("U_2_4"));
  CHECK(results_of(u)["uniform"] == true);
  CHECK(results_of(u)["condition"] == "(i)");
  CHECK(u.exit_code == kExitOk);
  const auto k = run_uniform(load("MK4"));
  CHECK(results_of(k)["uniform"] == false);
  CHECK(k.exit_code == kExitOk);
  CHECK(results_of(run_uniform(load("U_3_3")))["condition"] == "(iv)");
  const Matroid bad = lmtest::disjoint_sum(uniform(2, 4), uniform(2, 4));
  CHECK(run_uniform({"U24+U24", bad}).exit_code == kExitMismatch);
}

TEST_CASE("rational literals") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-1/2") == Rational(-1, 2));
  CHECK(parse_rational(" 0.25 ") == Rational(1, 4));
  CHECK(parse_rational("+.5") == Rational(1, 2));
  CHECK(to_string(Rational(6, 4)) == "3/2");
  CHECK(to_string(Rational(-4)) == "-4");
  for (const char* bad : {"", "abc", "1/0", "1/", ".", "1.2.3", "--1", "1e3"}) {
    CAPTURE(bad);
    CHECK(kind_of([&] { (void)parse_rational(bad); }) ==
          ErrorKind::ParseError);
  }
  CHECK(split_csv("a,,b") == std::vector<std::string>{"a", "", "b"});
}
