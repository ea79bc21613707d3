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

#ifndef SIGNEDVA_ERROR_H_
#define SIGNEDVA_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace signedva {

using Vertex = int;

enum class ErrorCode {
  kInvalidGraph,
  kUnknownVertex,
  kInvalidClass,
  kInvalidColoring,
  kMalformedRotation,
  kNonPlanar,
  kNotNearTriangulation,
  kNotOnOuterFace,
  kNotBalanced,
  kInvalidLists,
  kListTooSmall,
  kPrecolorInvalid,
  kNotWagner,
  kBadPin,
  kSharedCliqueMismatch,
  kColoringsDisagree,
  kNotDecomposable,
  kOracleCapExceeded,
  kExhausted,
  kParse,
  // An algorithm produced output that fails its own certificate check.
  kDefect,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library. `witness` carries a vertex sequence
// when the failure has one (a negative cycle for kNotBalanced, an offending
// face for kNotNearTriangulation).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::vector<Vertex> witness = {});

  ErrorCode code() const { return code_; }
  const std::vector<Vertex>& witness() const { return witness_; }

 private:
  ErrorCode code_;
  std::vector<Vertex> witness_;
};

}  // namespace signedva

#endif  // SIGNEDVA_ERROR_H_
