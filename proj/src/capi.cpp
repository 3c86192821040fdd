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

#include "lockedmat.h"

#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "lockedmat/catalog.hpp"
#include "lockedmat/commands.hpp"
#include "lockedmat/error.hpp"
#include "lockedmat/io.hpp"
#include "lockedmat/locked.hpp"

struct lkm_matroid {
  lockedmat::MatroidFile file;
};

struct lkm_report {
  lockedmat::Report report;
};

namespace {

using lockedmat::ErrorKind;

thread_local std::string g_last_error;

lkm_status to_status(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptyBasisFamily: return LKM_ERR_EMPTY_BASIS_FAMILY;
    case ErrorKind::UnequalBasisSizes: return LKM_ERR_UNEQUAL_BASIS_SIZES;
    case ErrorKind::ExchangeAxiomViolated: return LKM_ERR_EXCHANGE_AXIOM;
    case ErrorKind::ForeignElement: return LKM_ERR_FOREIGN_ELEMENT;
    case ErrorKind::EmptyGroundSet: return LKM_ERR_EMPTY_GROUND_SET;
    case ErrorKind::DuplicateLabel: return LKM_ERR_DUPLICATE_LABEL;
    case ErrorKind::GroundSetTooLarge: return LKM_ERR_GROUND_SET_TOO_LARGE;
    case ErrorKind::LoopPresent: return LKM_ERR_LOOP_PRESENT;
    case ErrorKind::ColoopPresent: return LKM_ERR_COLOOP_PRESENT;
    case ErrorKind::NotProperSubset: return LKM_ERR_NOT_PROPER_SUBSET;
    case ErrorKind::NotConnected: return LKM_ERR_NOT_CONNECTED;
    case ErrorKind::Not3Connected: return LKM_ERR_NOT_3_CONNECTED;
    case ErrorKind::DegeneratePolytope: return LKM_ERR_DEGENERATE_POLYTOPE;
    case ErrorKind::DimensionMismatch: return LKM_ERR_DIMENSION_MISMATCH;
    case ErrorKind::BadParameters: return LKM_ERR_BAD_PARAMETERS;
    case ErrorKind::NotCircuitHyperplane: return LKM_ERR_NOT_CIRCUIT_HYPERPLANE;
    case ErrorKind::BasepointDegenerate: return LKM_ERR_BASEPOINT_DEGENERATE;
    case ErrorKind::DisconnectedGraph: return LKM_ERR_DISCONNECTED_GRAPH;
    case ErrorKind::UnknownName: return LKM_ERR_UNKNOWN_NAME;
    case ErrorKind::ParseError: return LKM_ERR_PARSE;
    case ErrorKind::IoError: return LKM_ERR_IO;
    case ErrorKind::CertificationFailed: return LKM_ERR_CERTIFICATION_FAILED;
  }
  return LKM_ERR_INTERNAL;
}

template <class Fn>
lkm_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return LKM_OK;
  } catch (const lockedmat::Error& e) {
    g_last_error = e.what();
    return to_status(e.kind());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return LKM_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return LKM_ERR_INTERNAL;
  }
}

lkm_status null_argument(const char* what) {
  g_last_error = std::string("null argument: ") + what;
  return LKM_ERR_NULL_ARGUMENT;
}

lockedmat::Validation validation(int validate) {
  return validate ? lockedmat::Validation::ExchangeAxiom
                  : lockedmat::Validation::Skip;
}

lockedmat::FileEncoding encoding(int nonbases) {
  return nonbases ? lockedmat::FileEncoding::Nonbases
                  : lockedmat::FileEncoding::Bases;
}

lockedmat::PolytopeKind polytope(lkm_polytope kind) {
  return kind == LKM_POLYTOPE_INDEPENDENCE
             ? lockedmat::PolytopeKind::Independence
             : lockedmat::PolytopeKind::Bases;
}

template <class Fn>
lkm_status run_report(const lkm_matroid* m, lkm_report** out, Fn&& fn) {
  if (!m) return null_argument("matroid");
  if (!out) return null_argument("out");
  return guarded([&] { *out = new lkm_report{fn(m->file)}; });
}

}  // namespace

extern "C" {

const char* lkm_version(void) { return "1.0.0"; }

const char* lkm_status_string(lkm_status status) {
  switch (status) {
    case LKM_OK: return "ok";
    case LKM_ERR_EMPTY_BASIS_FAMILY: return "empty basis family";
    case LKM_ERR_UNEQUAL_BASIS_SIZES: return "unequal basis sizes";
    case LKM_ERR_EXCHANGE_AXIOM: return "basis exchange axiom violated";
    case LKM_ERR_FOREIGN_ELEMENT: return "element outside the ground set";
    case LKM_ERR_EMPTY_GROUND_SET: return "empty ground set";
    case LKM_ERR_DUPLICATE_LABEL: return "duplicate element label";
    case LKM_ERR_GROUND_SET_TOO_LARGE: return "ground set too large";
    case LKM_ERR_LOOP_PRESENT: return "matroid has a loop";
    case LKM_ERR_COLOOP_PRESENT: return "matroid has a coloop";
    case LKM_ERR_NOT_PROPER_SUBSET: return "subset is empty or the ground set";
    case LKM_ERR_NOT_CONNECTED: return "matroid is not connected";
    case LKM_ERR_NOT_3_CONNECTED: return "matroid is not 3-connected";
    case LKM_ERR_DEGENERATE_POLYTOPE: return "polytope is a single point";
    case LKM_ERR_DIMENSION_MISMATCH: return "dimension mismatch";
    case LKM_ERR_BAD_PARAMETERS: return "bad parameters";
    case LKM_ERR_NOT_CIRCUIT_HYPERPLANE: return "not a circuit-hyperplane";
    case LKM_ERR_BASEPOINT_DEGENERATE: return "basepoint is a loop or coloop";
    case LKM_ERR_DISCONNECTED_GRAPH: return "graph is disconnected";
    case LKM_ERR_UNKNOWN_NAME: return "unknown catalog name";
    case LKM_ERR_PARSE: return "parse error";
    case LKM_ERR_IO: return "i/o error";
    case LKM_ERR_CERTIFICATION_FAILED: return "certification failed";
    case LKM_ERR_NULL_ARGUMENT: return "null argument";
    case LKM_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* lkm_last_error_message(void) { return g_last_error.c_str(); }

lkm_status lkm_matroid_load(const char* path, int validate,
                            lkm_matroid** out) {
  if (!path) return null_argument("path");
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = new lkm_matroid{
        lockedmat::load_matroid_file(path, validation(validate))};
  });
}

lkm_status lkm_matroid_parse(const char* text, int validate,
                             lkm_matroid** out) {
  if (!text) return null_argument("text");
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = new lkm_matroid{
        lockedmat::parse_matroid_file(text, validation(validate))};
  });
}

lkm_status lkm_matroid_catalog(const char* name, lkm_matroid** out) {
  if (!name) return null_argument("name");
  if (!out) return null_argument("out");
  return guarded([&] {
    auto entry = lockedmat::catalog_get(name);
    *out = new lkm_matroid{{entry.name, std::move(entry.matroid)}};
  });
}

lkm_status lkm_matroid_two_sum(const lkm_matroid* a, const char* base_a,
                               const lkm_matroid* b, const char* base_b,
                               lkm_matroid** out) {
  if (!a || !b) return null_argument("matroid");
  if (!base_a || !base_b) return null_argument("basepoint");
  if (!out) return null_argument("out");
  return guarded([&] {
    const auto& ma = a->file.matroid;
    const auto& mb = b->file.matroid;
    auto sum = lockedmat::two_sum(ma, ma.ground().index_of(base_a), mb,
                                  mb.ground().index_of(base_b));
    *out = new lkm_matroid{
        {a->file.name + "+2" + b->file.name, std::move(sum)}};
  });
}

void lkm_matroid_free(lkm_matroid* m) { delete m; }

lkm_status lkm_matroid_write(const lkm_matroid* m, const char* path,
                             int nonbases) {
  if (!m) return null_argument("matroid");
  if (!path) return null_argument("path");
  return guarded(
      [&] { lockedmat::save_matroid_file(m->file, path, encoding(nonbases)); });
}

lkm_status lkm_matroid_serialize(const lkm_matroid* m, int nonbases,
                                 char** out) {
  if (!m) return null_argument("matroid");
  if (!out) return null_argument("out");
  return guarded([&] {
    const std::string text =
        lockedmat::emit_matroid_file(m->file, encoding(nonbases));
    char* buf = new char[text.size() + 1];
    std::memcpy(buf, text.c_str(), text.size() + 1);
    *out = buf;
  });
}

void lkm_string_free(char* s) { delete[] s; }

const char* lkm_matroid_name(const lkm_matroid* m) {
  return m ? m->file.name.c_str() : "";
}

size_t lkm_matroid_size(const lkm_matroid* m) {
  return m ? static_cast<size_t>(m->file.matroid.size()) : 0;
}

size_t lkm_matroid_rank(const lkm_matroid* m) {
  return m ? static_cast<size_t>(m->file.matroid.rank()) : 0;
}

size_t lkm_matroid_basis_count(const lkm_matroid* m) {
  return m ? m->file.matroid.bases().size() : 0;
}

lkm_status lkm_matroid_rank_of(const lkm_matroid* m, const char* const* labels,
                               size_t count, int* out) {
  if (!m) return null_argument("matroid");
  if (!labels && count > 0) return null_argument("labels");
  if (!out) return null_argument("out");
  return guarded([&] {
    std::vector<std::string> names(labels, labels + count);
    const auto& mat = m->file.matroid;
    *out = mat.rank(mat.ground().subset(names));
  });
}

lkm_status lkm_matroid_locked_numbers(const lkm_matroid* m, int* ell,
                                      int* rank, int* parallel_count,
                                      int* coparallel_count) {
  if (!m) return null_argument("matroid");
  if (!ell || !rank || !parallel_count || !coparallel_count) {
    return null_argument("out");
  }
  return guarded([&] {
    const auto k = lockedmat::locked_number_oracle(m->file.matroid);
    *ell = k.ell;
    *rank = k.rank_of_m;
    *parallel_count = k.parallel_count;
    *coparallel_count = k.coparallel_count;
  });
}

lkm_status lkm_run_info(const lkm_matroid* m, lkm_report** out) {
  return run_report(m, out, [](const auto& f) { return lockedmat::run_info(f); });
}

lkm_status lkm_run_locked(const lkm_matroid* m, int k, lkm_report** out) {
  return run_report(m, out, [k](const auto& f) {
    return lockedmat::run_locked(f, k < 0 ? std::nullopt : std::optional<int>(k));
  });
}

lkm_status lkm_run_facets(const lkm_matroid* m, lkm_polytope kind,
                          lkm_report** out) {
  return run_report(m, out, [kind](const auto& f) {
    return lockedmat::run_facets(f, polytope(kind));
  });
}

lkm_status lkm_run_certify(const lkm_matroid* m, lkm_polytope kind,
                           lkm_report** out) {
  return run_report(m, out, [kind](const auto& f) {
    return lockedmat::run_certify(f, polytope(kind));
  });
}

lkm_status lkm_run_mwbp(const lkm_matroid* m, const char* const* weights,
                        size_t count, lkm_report** out) {
  if (!weights && count > 0) return null_argument("weights");
  return run_report(m, out, [&](const auto& f) {
    return lockedmat::run_mwbp(
        f, std::vector<std::string>(weights, weights + count));
  });
}

lkm_status lkm_run_uniform(const lkm_matroid* m, lkm_report** out) {
  return run_report(m, out,
                    [](const auto& f) { return lockedmat::run_uniform(f); });
}

const char* lkm_report_text(const lkm_report* r) {
  return r ? r->report.text.c_str() : "";
}

const char* lkm_report_json(const lkm_report* r) {
  return r ? r->report.json.c_str() : "";
}

int lkm_report_exit_code(const lkm_report* r) {
  return r ? r->report.exit_code : LKM_EXIT_INPUT_ERROR;
}

void lkm_report_free(lkm_report* r) { delete r; }

}  // extern "C"
