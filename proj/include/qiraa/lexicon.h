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

#ifndef QIRAA_LEXICON_H_
#define QIRAA_LEXICON_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace qiraa {

// Exception words: words not pronounced by the regular rules, mapped to a
// corrected fully diacritized orthography that is fed back through the
// rule engine.
struct ExceptionEntry {
  std::u32string surface;    // undiacritized key
  std::u32string corrected;  // diacritized replacement

  bool operator==(const ExceptionEntry&) const = default;
};

class Lexicon {
 public:
  // One entry per line: surface TAB corrected. '#' lines are comments.
  static Lexicon Load(std::string_view text);

  // Entry whose surface equals `word` with its diacritics stripped.
  std::optional<ExceptionEntry> Lookup(std::u32string_view word) const;

  void Insert(const ExceptionEntry& entry);  // throws on duplicate surface
  void Erase(std::u32string_view surface);

  std::string Serialize() const;
  size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

 private:
  std::map<std::u32string, std::u32string, std::less<>> entries_;
};

// Strips the combining marks U+064B..U+0652.
std::u32string StripDiacritics(std::u32string_view word);

// The built-in exception lexicon (the classic defective-spelling words).
const Lexicon& DefaultLexicon();

}  // namespace qiraa

#endif  // QIRAA_LEXICON_H_
