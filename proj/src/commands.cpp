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

#include "lockedmat/commands.hpp"

#include <chrono>
#include <sstream>

#include <json.hpp>

#include "lockedmat/error.hpp"
#include "lockedmat/locked.hpp"
#include "lockedmat/optimize.hpp"
#include "lockedmat/uniformity.hpp"

namespace lockedmat {
namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

// Key/value lines with the values aligned in one column.
class TextBlock {
 public:
  void row(const std::string& key, const std::string& value) {
    rows_.emplace_back(key, value);
  }
  void line(const std::string& text) { rows_.emplace_back("", text); }

  std::string str() const {
    std::size_t width = 0;
    for (const auto& [k, v] : rows_) width = std::max(width, k.size());
    std::ostringstream out;
    for (const auto& [k, v] : rows_) {
      if (k.empty()) {
        out << v << "\n";
      } else {
        out << k << std::string(width - k.size() + 2, ' ') << v << "\n";
      }
    }
    return out.str();
  }

 private:
  std::vector<std::pair<std::string, std::string>> rows_;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

json labels(const GroundSet& g, Subset s) { return g.labels_of(s); }

json base_inputs(const MatroidFile& file) {
  return {{"matroid", file.name},
          {"elements", file.matroid.size()},
          {"rank", file.matroid.rank()}};
}

Report finish(const std::string& command, json inputs, json results,
              const TextBlock& text, Clock::time_point start,
              int exit_code = kExitOk) {
  const double seconds =
      std::chrono::duration<double>(Clock::now() - start).count();
  json doc;
  doc["command"] = command;
  doc["inputs"] = std::move(inputs);
  doc["results"] = std::move(results);
  doc["timing"] = {{"seconds", seconds}};
  return {command, text.str(), doc.dump(2) + "\n", exit_code};
}

json constraint_json(const LinearConstraint& c, const GroundSet& g) {
  return {{"constraint", format_constraint(c, g)},
          {"origin", std::string(to_string(c.origin))},
          {"support", labels(g, c.support())},
          {"coeffs", c.coeffs},
          {"sense", std::string(to_string(c.sense))},
          {"rhs", c.rhs}};
}

std::string tagged(const LinearConstraint& c, const GroundSet& g) {
  return format_constraint(c, g) + "  [" + std::string(to_string(c.origin)) +
         "]";
}

json partition_json(const GroundSet& g, const std::vector<Subset>& parts) {
  json out = json::array();
  for (Subset s : parts) out.push_back(labels(g, s));
  return out;
}

std::string format_partition(const GroundSet& g,
                             const std::vector<Subset>& parts) {
  std::string out;
  for (Subset s : parts) {
    if (!out.empty()) out += " ";
    out += g.format(s);
  }
  return out;
}

void describe_structure(const Matroid& m, const LockedStructure& s,
                        TextBlock& text, json& results) {
  const GroundSet& g = m.ground();
  results["locked_number"] = s.locked.size();
  results["parallel"] = partition_json(g, s.parallel);
  results["coparallel"] = partition_json(g, s.coparallel);
  json locked = json::array();
  for (Subset l : s.locked) {
    locked.push_back({{"set", labels(g, l)}, {"rank", m.rank(l)}});
  }
  results["locked"] = locked;
  json rho = json::array();
  for (const auto& [key, value] : s.rho) {
    rho.push_back({{"set", labels(g, key)}, {"rank", value}});
  }
  results["rho"] = rho;

  text.row("locked number", std::to_string(s.locked.size()));
  text.row("parallel", std::to_string(s.parallel.size()) + " classes  " +
                           format_partition(g, s.parallel));
  text.row("coparallel", std::to_string(s.coparallel.size()) + " classes  " +
                             format_partition(g, s.coparallel));
  text.line("locked sets:");
  for (Subset l : s.locked) {
    text.line("  " + g.format(l) + "  rank " + std::to_string(m.rank(l)));
  }
}

}  // namespace

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(text);
  while (std::getline(in, field, ',')) out.push_back(field);
  if (!text.empty() && text.back() == ',') out.emplace_back();
  return out;
}

Report run_info(const MatroidFile& file) {
  const auto start = Clock::now();
  const Matroid& m = file.matroid;
  const GroundSet& g = m.ground();
  const auto parts = components(m);
  const bool connected = parts.size() == 1;
  const bool three = is_3_connected(m);

  json results = {{"elements", g.labels()},
                  {"rank", m.rank()},
                  {"bases", m.bases().size()},
                  {"connected", connected},
                  {"three_connected", three},
                  {"components", partition_json(g, parts)},
                  {"loops", labels(g, m.loops())},
                  {"coloops", labels(g, m.coloops())}};
  TextBlock text;
  text.row("matroid", file.name);
  text.row("elements", std::to_string(m.size()) + "  " + g.format(m.ground_mask()));
  text.row("rank", std::to_string(m.rank()));
  text.row("bases", std::to_string(m.bases().size()));
  text.row("connected", yes_no(connected));
  text.row("3-connected", yes_no(three));
  text.row("components", std::to_string(parts.size()) + "  " +
                             format_partition(g, parts));
  text.row("loops", g.format(m.loops()));
  text.row("coloops", g.format(m.coloops()));
  return finish("info", base_inputs(file), std::move(results), text, start);
}

Report run_locked(const MatroidFile& file, std::optional<int> k) {
  const auto start = Clock::now();
  const Matroid& m = file.matroid;
  json inputs = base_inputs(file);
  json results;
  TextBlock text;
  text.row("matroid", file.name);
  if (!k) {
    describe_structure(m, locked_structure(m), text, results);
    return finish("locked", std::move(inputs), std::move(results), text,
                  start);
  }

  inputs["k"] = *k;
  const KLockedVerdict verdict = k_locked_oracle(m, *k);
  results["threshold"] = verdict.threshold;
  results["verdict"] = verdict.is_no() ? "No" : "structure";
  text.row("k", std::to_string(*k));
  text.row("threshold", "|E|^k = " + std::to_string(verdict.threshold));
  if (verdict.is_no()) {
    text.row("verdict", "No");
    text.row("found", "more than " + std::to_string(verdict.threshold) +
                          " locked subsets");
    results["locked_seen"] = verdict.locked_seen;
  } else {
    text.row("verdict", "structure");
    describe_structure(m, *verdict.structure, text, results);
  }
  return finish("locked", std::move(inputs), std::move(results), text, start);
}

Report run_facets(const MatroidFile& file, PolytopeKind kind) {
  const auto start = Clock::now();
  const Matroid& m = file.matroid;
  const GroundSet& g = m.ground();
  const bool bases = kind == PolytopeKind::Bases;
  const FacetSystem system =
      bases ? predicted_facets_bases(m) : predicted_facets_independence(m);

  json inputs = base_inputs(file);
  inputs["polytope"] = bases ? "bases" : "independence";
  json results;
  TextBlock text;
  std::string header = std::string("# ") +
                       (bases ? "bases" : "independence") +
                       " polytope of " + file.name + ": " +
                       std::to_string(system.facets.size()) + " facets";
  if (system.equality) header += " + 1 equality";
  text.line(header);
  if (system.equality) {
    results["equality"] = constraint_json(*system.equality, g);
    text.line(tagged(*system.equality, g));
  }
  json facets = json::array();
  for (const auto& c : system.facets) {
    facets.push_back(constraint_json(c, g));
    text.line(tagged(c, g));
  }
  results["facets"] = facets;
  results["facet_count"] = system.facets.size();
  json collapsed = json::array();
  for (const auto& c : system.collapsed) {
    collapsed.push_back(constraint_json(c, g));
    text.line("# collapsed into the equality: " + tagged(c, g));
  }
  results["collapsed"] = collapsed;
  return finish("facets", std::move(inputs), std::move(results), text, start);
}

Report run_certify(const MatroidFile& file, PolytopeKind kind) {
  const auto start = Clock::now();
  const Matroid& m = file.matroid;
  const GroundSet& g = m.ground();
  const bool bases = kind == PolytopeKind::Bases;
  const CertificationReport r = bases ? certify(m) : certify_independence(m);

  json inputs = base_inputs(file);
  inputs["polytope"] = bases ? "bases" : "independence";
  auto constraint_list = [&](const std::vector<LinearConstraint>& cs) {
    json out = json::array();
    for (const auto& c : cs) out.push_back(constraint_json(c, g));
    return out;
  };
  json missing = json::array();
  for (const auto& f : r.missing) missing.push_back(constraint_json(f.witness, g));
  json lemma = json::array();
  for (Subset a : r.lemma_violations) lemma.push_back(labels(g, a));
  json results = {{"passed", r.passed()},
                  {"dimension", r.dimension},
                  {"vertices", r.vertex_count},
                  {"predicted", r.predicted_count},
                  {"oracle", r.oracle_count},
                  {"matched", r.matched},
                  {"extra", constraint_list(r.extra)},
                  {"duplicates", constraint_list(r.duplicates)},
                  {"missing", missing},
                  {"collapsed", constraint_list(r.collapsed)},
                  {"lemma_violations", lemma}};

  TextBlock text;
  text.row("matroid", file.name);
  text.row("polytope", bases ? "bases" : "independence");
  text.row("dimension", std::to_string(r.dimension));
  text.row("vertices", std::to_string(r.vertex_count));
  text.row("predicted", std::to_string(r.predicted_count));
  text.row("oracle", std::to_string(r.oracle_count));
  text.row("matched", std::to_string(r.matched));
  for (const auto& c : r.extra) text.line("extra      " + tagged(c, g));
  for (const auto& c : r.duplicates) text.line("duplicate  " + tagged(c, g));
  for (const auto& f : r.missing) {
    text.line("missing    " + format_constraint(f.witness, g));
  }
  for (Subset a : r.lemma_violations) {
    text.line("lemma      " + g.format(a) +
              " is closed and connected with a disconnected dual complement, "
              "yet defines a facet");
  }
  for (const auto& c : r.collapsed) {
    text.line("note       degenerate collapse into the equality: " +
              tagged(c, g));
  }
  text.row("result", r.passed() ? "PASS" : "FAIL");
  return finish("certify", std::move(inputs), std::move(results), text, start,
                r.passed() ? kExitOk : kExitMismatch);
}

Report run_mwbp(const MatroidFile& file,
                const std::vector<std::string>& weights) {
  const auto start = Clock::now();
  const Matroid& m = file.matroid;
  const GroundSet& g = m.ground();
  if (weights.size() != static_cast<std::size_t>(m.size())) {
    throw Error(ErrorKind::DimensionMismatch,
                std::to_string(weights.size()) + " weights for " +
                    std::to_string(m.size()) + " elements");
  }
  WeightFunction c;
  for (const auto& w : weights) c.push_back(parse_rational(w));
  const OptimizationResult best = greedy_max_basis(m, c);

  json inputs = base_inputs(file);
  json wj = json::array();
  for (const auto& w : c) wj.push_back(to_string(w));
  inputs["weights"] = wj;
  json trace = json::array();
  TextBlock text;
  text.row("matroid", file.name);
  std::string wtext;
  for (const auto& w : c) wtext += (wtext.empty() ? "" : ",") + to_string(w);
  text.row("weights", wtext);
  text.row("basis", g.format(best.basis));
  text.row("value", to_string(best.value));
  text.line("trace:");
  for (const auto& step : best.trace) {
    trace.push_back({{"element", g.label(step.element)},
                     {"weight", to_string(c[step.element])},
                     {"accepted", step.accepted}});
    text.line("  " + g.label(step.element) + "  " + to_string(c[step.element]) +
              "  " + (step.accepted ? "accept" : "reject"));
  }
  json results = {{"basis", labels(g, best.basis)},
                  {"value", to_string(best.value)},
                  {"trace", trace}};
  return finish("mwbp", std::move(inputs), std::move(results), text, start);
}

Report run_uniform(const MatroidFile& file) {
  const auto start = Clock::now();
  const Matroid& m = file.matroid;
  const UniformityVerdict v = test_uniformity(m);
  const bool direct = is_uniform_direct(m);

  json results = {{"uniform", v.uniform},
                  {"condition", std::string(to_string(v.witness))},
                  {"direct_check", direct},
                  {"note", v.note}};
  TextBlock text;
  text.row("matroid", file.name);
  text.row("uniform", yes_no(v.uniform));
  text.row("condition", std::string(to_string(v.witness)));
  if (v.inputs_used) {
    const LockedNumbers& k = *v.inputs_used;
    results["locked_numbers"] = {{"ell", k.ell},
                                 {"rank", k.rank_of_m},
                                 {"parallel_count", k.parallel_count},
                                 {"coparallel_count", k.coparallel_count}};
    text.row("oracle", "ell=" + std::to_string(k.ell) +
                           " r=" + std::to_string(k.rank_of_m) +
                           " |P|=" + std::to_string(k.parallel_count) +
                           " |S|=" + std::to_string(k.coparallel_count));
  }
  if (!v.note.empty()) text.row("note", v.note);
  text.row("direct check", yes_no(direct));
  return finish("uniform", base_inputs(file), std::move(results), text, start,
                v.uniform == direct ? kExitOk : kExitMismatch);
}

}  // namespace lockedmat
