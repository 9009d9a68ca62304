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

#ifndef QIRAA_ERROR_H_
#define QIRAA_ERROR_H_

#include <stdexcept>
#include <string>

namespace qiraa {

enum class ErrorCode {
  // text_norm
  kInvalidEncoding,
  kUnsupportedCodepoint,
  kUnsupportedToken,
  kOutOfRange,
  // lexicon
  kDuplicateKey,
  kMalformedLine,
  // g2p
  kUnknownClass,
  kUnknownPhonemeLabel,
  kEmptyFocus,
  kUnknownGrapheme,
  kNoRuleMatches,
  kMissingDiacritic,
  kMissingBoundary,
  kNoTemplateForKind,
  // inventory
  kMissingFile,
  kNotMono,
  kNotPcm16,
  kRateMismatch,
  kBadSliceBounds,
  kDuplicateLabel,
  // synthesizer
  kUnitNotFound,
  kCrossfadeTooLong,
  kEmptyPlan,
  // eval
  kZeroTested,
  // io
  kIoError,
};

const char* ErrorCodeName(ErrorCode code);

// Domain error. `position` carries a byte offset, grapheme index or line
// number depending on the operation that raised it (-1 when not applicable).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, long position = -1)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code),
        position_(position) {}

  ErrorCode code() const { return code_; }
  long position() const { return position_; }

 private:
  ErrorCode code_;
  long position_;
};

}  // namespace qiraa

#endif  // QIRAA_ERROR_H_
