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

#include "lockedmat/error.hpp"

namespace lockedmat {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptyBasisFamily: return "EmptyBasisFamily";
    case ErrorKind::UnequalBasisSizes: return "UnequalBasisSizes";
    case ErrorKind::ExchangeAxiomViolated: return "ExchangeAxiomViolated";
    case ErrorKind::ForeignElement: return "ForeignElement";
    case ErrorKind::EmptyGroundSet: return "EmptyGroundSet";
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::GroundSetTooLarge: return "GroundSetTooLarge";
    case ErrorKind::LoopPresent: return "LoopPresent";
    case ErrorKind::ColoopPresent: return "ColoopPresent";
    case ErrorKind::NotProperSubset: return "NotProperSubset";
    case ErrorKind::NotConnected: return "NotConnected";
    case ErrorKind::Not3Connected: return "Not3Connected";
    case ErrorKind::DegeneratePolytope: return "DegeneratePolytope";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::BadParameters: return "BadParameters";
    case ErrorKind::NotCircuitHyperplane: return "NotCircuitHyperplane";
    case ErrorKind::BasepointDegenerate: return "BasepointDegenerate";
    case ErrorKind::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::CertificationFailed: return "CertificationFailed";
  }
  return "Unknown";
}

}  // namespace lockedmat
