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

#ifndef LOCKEDMAT_IO_HPP_
#define LOCKEDMAT_IO_HPP_

#include <string>

#include "lockedmat/matroid.hpp"

namespace lockedmat {

// Matroid file, JSON:
//   {"name": "MK4", "ground_set": ["ab", ...], "rank": 3,
//    "bases": [["ab","ac","ad"], ...]}
// with "nonbases" in place of "bases" meaning every rank-sized subset except
// the listed ones.
struct MatroidFile {
  std::string name;
  Matroid matroid;
};

enum class FileEncoding { Bases, Nonbases };

// Throws ParseError and the Matroid::build errors.
MatroidFile parse_matroid_file(const std::string& text,
                               Validation validation = Validation::ExchangeAxiom);
// Also throws IoError.
MatroidFile load_matroid_file(const std::string& path,
                              Validation validation = Validation::ExchangeAxiom);

std::string emit_matroid_file(const MatroidFile& file,
                              FileEncoding encoding = FileEncoding::Bases);
void save_matroid_file(const MatroidFile& file, const std::string& path,
                       FileEncoding encoding = FileEncoding::Bases);

}  // namespace lockedmat

#endif  // LOCKEDMAT_IO_HPP_
