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

#ifndef QIRAA_TEXT_NORM_H_
#define QIRAA_TEXT_NORM_H_

#include <string>
#include <string_view>
#include <vector>

namespace qiraa {

enum class TokenKind { kWord, kNumber, kPunctuation };

struct Token {
  std::u32string surface;
  TokenKind kind = TokenKind::kWord;
  bool sentence_final = false;

  bool operator==(const Token&) const = default;
};

struct NormalizeOptions {
  // Emit punctuation tokens instead of dropping them.
  bool keep_punct = false;
};

// Turns raw UTF-8 text into a token stream of decomposed graphemes:
// presentation-form ligatures decomposed, tatweel removed, alef wasla mapped
// to plain alef, Arabic-Indic digits mapped to ASCII. Sentence-final
// punctuation (. ؟ ! ؛) sets sentence_final on the preceding token.
std::vector<Token> NormalizeText(std::string_view raw,
                                 const NormalizeOptions& opts = {});

// Canonical letter sequence for Arabic presentation forms (U+FB50-U+FEFF);
// identity for anything else. Lam-alef ligatures expand to two letters.
std::u32string DecomposeLigature(char32_t cp);

// Modern Standard Arabic cardinal for 0..9999, diacritized, one or more
// words. Throws Error(kOutOfRange) outside the range.
std::vector<std::u32string> ExpandNumber(long value);

// One token per line: surface TAB kind TAB sentence_final.
std::string FormatTokens(const std::vector<Token>& tokens);

// Inverse-ish of NormalizeText for the idempotence property: surfaces joined
// by spaces, with "." re-attached after sentence-final tokens.
std::string ReserializeTokens(const std::vector<Token>& tokens);

}  // namespace qiraa

#endif  // QIRAA_TEXT_NORM_H_
