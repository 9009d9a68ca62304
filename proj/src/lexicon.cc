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

#include "qiraa/lexicon.h"

#include <sstream>

#include "qiraa/builtin_data.h"
#include "qiraa/error.h"
#include "qiraa/phonemes.h"
#include "qiraa/utf8.h"

namespace qiraa {

namespace {

void CheckWellFormed(const std::u32string& word, int line_no) {
  for (char32_t cp : word) {
    if (cp == kTatweel || (cp >= U'ﭐ' && cp <= U'﻿') ||
        (!IsArabicLetter(cp) && !IsDiacritic(cp))) {
      throw Error(ErrorCode::kMalformedLine,
                  "non-Arabic grapheme on line " + std::to_string(line_no),
                  line_no);
    }
  }
}

}  // namespace

std::u32string StripDiacritics(std::u32string_view word) {
  std::u32string out;
  out.reserve(word.size());
  for (char32_t cp : word)
    if (!IsDiacritic(cp)) out.push_back(cp);
  return out;
}

Lexicon Lexicon::Load(std::string_view text) {
  Lexicon lex;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    size_t tab = line.find('\t');
    if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos)
      throw Error(ErrorCode::kMalformedLine,
                  "expected two tab-separated fields on line " +
                      std::to_string(line_no),
                  line_no);
    std::u32string surface = utf8::Decode(std::string_view(line).substr(0, tab));
    std::u32string corrected =
        utf8::Decode(std::string_view(line).substr(tab + 1));
    if (surface.empty() || corrected.empty())
      throw Error(ErrorCode::kMalformedLine,
                  "empty field on line " + std::to_string(line_no), line_no);
    CheckWellFormed(surface, line_no);
    CheckWellFormed(corrected, line_no);
    if (lex.entries_.count(surface))
      throw Error(ErrorCode::kDuplicateKey,
                  "duplicate surface " + utf8::Encode(surface) + " on line " +
                      std::to_string(line_no),
                  line_no);
    lex.entries_.emplace(std::move(surface), std::move(corrected));
  }
  return lex;
}

std::optional<ExceptionEntry> Lexicon::Lookup(std::u32string_view word) const {
  std::u32string key = StripDiacritics(word);
  auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return ExceptionEntry{it->first, it->second};
}

void Lexicon::Insert(const ExceptionEntry& entry) {
  if (entries_.count(entry.surface))
    throw Error(ErrorCode::kDuplicateKey,
                "duplicate surface " + utf8::Encode(entry.surface));
  entries_.emplace(entry.surface, entry.corrected);
}

void Lexicon::Erase(std::u32string_view surface) {
  auto it = entries_.find(std::u32string(surface));
  if (it != entries_.end()) entries_.erase(it);
}

std::string Lexicon::Serialize() const {
  std::string out;
  for (const auto& [surface, corrected] : entries_) {
    out += utf8::Encode(surface);
    out += '\t';
    out += utf8::Encode(corrected);
    out += '\n';
  }
  return out;
}

const Lexicon& DefaultLexicon() {
  static const Lexicon lex = Lexicon::Load(kBuiltinLexicon);
  return lex;
}

}  // namespace qiraa
