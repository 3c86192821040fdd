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

#ifndef LOCKEDMAT_ERROR_HPP_
#define LOCKEDMAT_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace lockedmat {

enum class ErrorKind {
  EmptyBasisFamily,
  UnequalBasisSizes,
  ExchangeAxiomViolated,
  ForeignElement,
  EmptyGroundSet,
  DuplicateLabel,
  GroundSetTooLarge,
  LoopPresent,
  ColoopPresent,
  NotProperSubset,
  NotConnected,
  Not3Connected,
  DegeneratePolytope,
  DimensionMismatch,
  BadParameters,
  NotCircuitHyperplane,
  BasepointDegenerate,
  DisconnectedGraph,
  UnknownName,
  ParseError,
  IoError,
  CertificationFailed,
};

std::string_view to_string(ErrorKind kind);

// All library failures are reported through this exception; kind() is the
// stable classification, what() carries the human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace lockedmat

#endif  // LOCKEDMAT_ERROR_HPP_
