// Copyright 2026 The ncycle Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ncycle/error.hpp"

namespace ncycle {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotPrime: return "NotPrime";
    case ErrorCode::kNotIrreducible: return "NotIrreducible";
    case ErrorCode::kCapExceeded: return "CapExceeded";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kCtxMismatch: return "CtxMismatch";
    case ErrorCode::kInvalidSubfield: return "InvalidSubfield";
    case ErrorCode::kNotDivisor: return "NotDivisor";
    case ErrorCode::kNotPermutation: return "NotPermutation";
    case ErrorCode::kPrereqNotNcycle: return "PrereqNotNcycle";
    case ErrorCode::kNotSurjective: return "NotSurjective";
    case ErrorCode::kBadParams: return "BadParams";
    case ErrorCode::kHValueNotRootOfUnity: return "HValueNotRootOfUnity";
    case ErrorCode::kKernelViolation: return "KernelViolation";
    case ErrorCode::kDegenerateH: return "DegenerateH";
    case ErrorCode::kInvalidSpec: return "InvalidSpec";
    case ErrorCode::kParse: return "Parse";
  }
  return "Unknown";
}

}  // namespace ncycle
