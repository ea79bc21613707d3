// Copyright 2026 The signedva Authors
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

#include "signedva/error.h"

#include <utility>

namespace signedva {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidGraph: return "InvalidGraph";
    case ErrorCode::kUnknownVertex: return "UnknownVertex";
    case ErrorCode::kInvalidClass: return "InvalidClass";
    case ErrorCode::kInvalidColoring: return "InvalidColoring";
    case ErrorCode::kMalformedRotation: return "MalformedRotation";
    case ErrorCode::kNonPlanar: return "NonPlanar";
    case ErrorCode::kNotNearTriangulation: return "NotNearTriangulation";
    case ErrorCode::kNotOnOuterFace: return "NotOnOuterFace";
    case ErrorCode::kNotBalanced: return "NotBalanced";
    case ErrorCode::kInvalidLists: return "InvalidLists";
    case ErrorCode::kListTooSmall: return "ListTooSmall";
    case ErrorCode::kPrecolorInvalid: return "PrecolorInvalid";
    case ErrorCode::kNotWagner: return "NotWagner";
    case ErrorCode::kBadPin: return "BadPin";
    case ErrorCode::kSharedCliqueMismatch: return "SharedCliqueMismatch";
    case ErrorCode::kColoringsDisagree: return "ColoringsDisagree";
    case ErrorCode::kNotDecomposable: return "NotDecomposable";
    case ErrorCode::kOracleCapExceeded: return "OracleCapExceeded";
    case ErrorCode::kExhausted: return "Exhausted";
    case ErrorCode::kParse: return "Parse";
    case ErrorCode::kDefect: return "Defect";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message,
             std::vector<Vertex> witness)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      witness_(std::move(witness)) {}

}  // namespace signedva
