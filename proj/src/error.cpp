// Copyright 2026 The tjoin Authors
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

#include "tjoin/error.hpp"

namespace tjoin {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kParity: return "ParityError";
    case ErrorCode::kSizeCap: return "SizeCap";
    case ErrorCode::kStructureViolation: return "StructureViolation";
    case ErrorCode::kDisconnected: return "DisconnectedError";
    case ErrorCode::kNotBipartite: return "NotBipartite";
    case ErrorCode::kNotAJoin: return "NotAJoin";
    case ErrorCode::kNonConservative: return "NonConservative";
    case ErrorCode::kNotExtreme: return "NotExtreme";
    case ErrorCode::kNotHomogeneous: return "NotHomogeneous";
    case ErrorCode::kInfeasible: return "Infeasible";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace tjoin
