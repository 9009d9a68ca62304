// Copyright (c) 2026 Qiraa Authors
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

#include "qiraa/error.h"

namespace qiraa {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidEncoding: return "InvalidEncoding";
    case ErrorCode::kUnsupportedCodepoint: return "UnsupportedCodepoint";
    case ErrorCode::kUnsupportedToken: return "UnsupportedToken";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kDuplicateKey: return "DuplicateKey";
    case ErrorCode::kMalformedLine: return "MalformedLine";
    case ErrorCode::kUnknownClass: return "UnknownClass";
    case ErrorCode::kUnknownPhonemeLabel: return "UnknownPhonemeLabel";
    case ErrorCode::kEmptyFocus: return "EmptyFocus";
    case ErrorCode::kUnknownGrapheme: return "UnknownGrapheme";
    case ErrorCode::kNoRuleMatches: return "NoRuleMatches";
    case ErrorCode::kMissingDiacritic: return "MissingDiacritic";
    case ErrorCode::kMissingBoundary: return "MissingBoundary";
    case ErrorCode::kNoTemplateForKind: return "NoTemplateForKind";
    case ErrorCode::kMissingFile: return "MissingFile";
    case ErrorCode::kNotMono: return "NotMono";
    case ErrorCode::kNotPcm16: return "NotPcm16";
    case ErrorCode::kRateMismatch: return "RateMismatch";
    case ErrorCode::kBadSliceBounds: return "BadSliceBounds";
    case ErrorCode::kDuplicateLabel: return "DuplicateLabel";
    case ErrorCode::kUnitNotFound: return "UnitNotFound";
    case ErrorCode::kCrossfadeTooLong: return "CrossfadeTooLong";
    case ErrorCode::kEmptyPlan: return "EmptyPlan";
    case ErrorCode::kZeroTested: return "ZeroTested";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace qiraa
