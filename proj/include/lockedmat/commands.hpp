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

#ifndef LOCKEDMAT_COMMANDS_HPP_
#define LOCKEDMAT_COMMANDS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "lockedmat/io.hpp"
#include "lockedmat/polytope.hpp"

namespace lockedmat {

// Exit-code contract shared by the command layer, the C API and the CLI.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitInputError = 2;

// Output of one command. `json` is the machine-readable rendering:
//   {"command": ..., "inputs": {...}, "results": {...},
//    "timing": {"seconds": ...}}
// `text` is the aligned human-readable rendering and carries no timing, so
// it is reproducible byte for byte.
struct Report {
  std::string command;
  std::string text;
  std::string json;
  int exit_code = kExitOk;
};

Report run_info(const MatroidFile& file);
// Without k: the full locked structure. With k: the k-locked oracle verdict.
Report run_locked(const MatroidFile& file, std::optional<int> k);
Report run_facets(const MatroidFile& file, PolytopeKind kind);
// Exit code kExitMismatch when certification fails.
Report run_certify(const MatroidFile& file, PolytopeKind kind);
// Weights as rational literals ("3", "-1/2", "0.25"), one per element.
Report run_mwbp(const MatroidFile& file, const std::vector<std::string>& weights);
// Exit code kExitMismatch when the verdict disagrees with the direct check.
Report run_uniform(const MatroidFile& file);

// Splits "5,4,3" into its fields; empty fields are kept so they can be
// rejected as malformed.
std::vector<std::string> split_csv(const std::string& text);

}  // namespace lockedmat

#endif  // LOCKEDMAT_COMMANDS_HPP_
