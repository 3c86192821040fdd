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


// lockedmat command-line tool. Talks to the library only through lockedmat.h.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "lockedmat.h"

namespace {

struct Options {
  bool json = false;
  bool no_validate = false;
  bool nonbases = false;
  std::string file;
  std::string file2;
  std::string name;
  std::string out;
  std::string polytope = "bases";
  std::string weights;
  std::string base;
  int k = -1;
};

int input_error(lkm_status status) {
  const char* detail = lkm_last_error_message();
  std::cerr << "error: "
            << (detail && *detail ? detail : lkm_status_string(status))
            << '\n';
  return LKM_EXIT_INPUT_ERROR;
}

int usage_error(const std::string& message) {
  std::cerr << "error: " << message << '\n';
  return LKM_EXIT_INPUT_ERROR;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string field;
  for (char c : text) {
    if (c == sep) {
      out.push_back(field);
      field.clear();
    } else {
      field.push_back(c);
    }
  }
  out.push_back(field);
  return out;
}

// RAII wrappers around the opaque handles.
struct MatroidHandle {
  lkm_matroid* ptr = nullptr;
  ~MatroidHandle() { lkm_matroid_free(ptr); }
};

struct ReportHandle {
  lkm_report* ptr = nullptr;
  ~ReportHandle() { lkm_report_free(ptr); }
};

int emit(lkm_status status, const ReportHandle& report, const Options& opt) {
  if (status != LKM_OK) return input_error(status);
  std::cout << (opt.json ? lkm_report_json(report.ptr)
                         : lkm_report_text(report.ptr));
  return lkm_report_exit_code(report.ptr);
}

int write_matroid(const lkm_matroid* m, const Options& opt) {
  const int nonbases = opt.nonbases ? 1 : 0;
  if (opt.out.empty() || opt.out == "-") {
    char* text = nullptr;
    const lkm_status st = lkm_matroid_serialize(m, nonbases, &text);
    if (st != LKM_OK) return input_error(st);
    std::cout << text;
    lkm_string_free(text);
  } else {
    const lkm_status st = lkm_matroid_write(m, opt.out.c_str(), nonbases);
    if (st != LKM_OK) return input_error(st);
    std::cerr << "wrote " << lkm_matroid_name(m) << " (|E|="
              << lkm_matroid_size(m) << ", " << lkm_matroid_basis_count(m)
              << " bases) to " << opt.out << '\n';
  }
  return LKM_EXIT_OK;
}

lkm_status load(const std::string& path, const Options& opt,
                MatroidHandle& m) {
  return lkm_matroid_load(path.c_str(), opt.no_validate ? 0 : 1, &m.ptr);
}

int dispatch(const std::string& command, const Options& opt) {
  if (command == "catalog") {
    MatroidHandle m;
    const lkm_status st = lkm_matroid_catalog(opt.name.c_str(), &m.ptr);
    if (st != LKM_OK) return input_error(st);
    return write_matroid(m.ptr, opt);
  }
  if (command == "two-sum") {
    const auto bases = split(opt.base, ',');
    if (bases.size() != 2 || bases[0].empty() || bases[1].empty()) {
      return usage_error("--base expects two labels p1,p2");
    }
    MatroidHandle a, b, sum;
    lkm_status st = load(opt.file, opt, a);
    if (st != LKM_OK) return input_error(st);
    st = load(opt.file2, opt, b);
    if (st != LKM_OK) return input_error(st);
    st = lkm_matroid_two_sum(a.ptr, bases[0].c_str(), b.ptr, bases[1].c_str(),
                             &sum.ptr);
    if (st != LKM_OK) return input_error(st);
    return write_matroid(sum.ptr, opt);
  }

  MatroidHandle m;
  const lkm_status loaded = load(opt.file, opt, m);
  if (loaded != LKM_OK) return input_error(loaded);
  const lkm_polytope kind = opt.polytope == "independence"
                                ? LKM_POLYTOPE_INDEPENDENCE
                                : LKM_POLYTOPE_BASES;
  ReportHandle r;
  if (command == "info") return emit(lkm_run_info(m.ptr, &r.ptr), r, opt);
  if (command == "locked") {
    return emit(lkm_run_locked(m.ptr, opt.k, &r.ptr), r, opt);
  }
  if (command == "facets") {
    return emit(lkm_run_facets(m.ptr, kind, &r.ptr), r, opt);
  }
  if (command == "certify") {
    return emit(lkm_run_certify(m.ptr, kind, &r.ptr), r, opt);
  }
  if (command == "mwbp") {
    const auto fields = split(opt.weights, ',');
    std::vector<const char*> ptrs;
    for (const auto& f : fields) ptrs.push_back(f.c_str());
    return emit(lkm_run_mwbp(m.ptr, ptrs.data(), ptrs.size(), &r.ptr), r, opt);
  }
  if (command == "uniform") return emit(lkm_run_uniform(m.ptr, &r.ptr), r, opt);
  return usage_error("unknown command " + command);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Locked subsets, matroid polytope facets and uniformity tests"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(lkm_version()));

  Options opt;
  app.add_flag("--json", opt.json, "Machine-readable output");
  app.add_flag("--no-validate", opt.no_validate,
               "Skip the basis exchange check when loading files");

  auto file_cmd = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", opt.file, "Matroid file")->required();
    return sub;
  };
  auto polytope_opt = [&](CLI::App* sub) {
    sub->add_option("--polytope", opt.polytope, "bases or independence")
        ->check(CLI::IsMember({"bases", "independence"}));
  };

  file_cmd("info", "Size, rank, bases and connectivity");
  file_cmd("locked", "Locked subsets, or the k-locked verdict with --k")
      ->add_option("--k", opt.k, "Polynomial degree of the locked bound")
      ->check(CLI::NonNegativeNumber);
  polytope_opt(file_cmd("facets", "Predicted facet description"));
  polytope_opt(file_cmd("certify", "Compare predicted and brute-force facets"));
  file_cmd("mwbp", "Maximum-weight basis by the greedy algorithm")
      ->add_option("--weights", opt.weights, "w1,w2,... one per element")
      ->required();
  file_cmd("uniform", "Uniformity verdict with its witness condition");

  CLI::App* two = app.add_subcommand("two-sum", "2-sum of two matroid files");
  two->add_option("file1", opt.file, "First matroid file")->required();
  two->add_option("file2", opt.file2, "Second matroid file")->required();
  two->add_option("--base", opt.base, "Basepoint labels p1,p2")->required();
  two->add_option("-o,--output", opt.out, "Output path (default stdout)");
  two->add_flag("--nonbases", opt.nonbases, "Write the non-bases encoding");

  CLI::App* cat = app.add_subcommand("catalog", "Write a named matroid");
  cat->add_option("name", opt.name, "MK4, W3, Q6, P6, V8 or U_r_n")
      ->required();
  cat->add_option("-o,--output", opt.out, "Output path (default stdout)");
  cat->add_flag("--nonbases", opt.nonbases, "Write the non-bases encoding");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return LKM_EXIT_INPUT_ERROR;
  }
  return dispatch(app.get_subcommands().front()->get_name(), opt);
}
