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

#ifndef QIRAA_G2P_H_
#define QIRAA_G2P_H_

#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qiraa/lexicon.h"
#include "qiraa/text_norm.h"

namespace qiraa {

enum class ContextTag {
  kSentenceStart,  // #
  kSentenceEnd,    // $
  kWordBoundary,   // §
  kConsonant,      // C
  kVowel,          // V
  kSolar,          // SC
  kLunar,          // LC
  kAny,            // *
  kLiteral,
};

struct ContextClass {
  ContextTag tag = ContextTag::kAny;
  char32_t literal = 0;  // set iff tag == kLiteral

  bool operator==(const ContextClass&) const = default;
};

// One context-sensitive rewrite rule: LEFT ; FOCUS ; RIGHT ; OUTPUT.
struct PronRule {
  ContextClass left;
  std::u32string focus;  // 1..3 graphemes
  ContextClass right;
  std::vector<std::string> output;  // phoneme labels, possibly empty
  int source_line = 0;
};

using PhonemeSeq = std::vector<std::string>;
using Diphone = std::pair<std::string, std::string>;
using DiphoneSeq = std::vector<Diphone>;

enum class Strictness { kStrict, kLenient };

struct TranscribeOptions {
  Strictness strictness = Strictness::kStrict;
};

class RuleSet {
 public:
  // Parses the rule DSL. Rules are ordered by specificity: longer focus
  // first, then literal/boundary contexts before solar/lunar before
  // consonant/vowel before *, then file order.
  static RuleSet Parse(std::string_view text);

  const std::vector<PronRule>& rules() const { return rules_; }
  bool empty() const { return rules_.empty(); }

 private:
  std::vector<PronRule> rules_;
};

// The rule pack shipped with the project (data/arabic.rules).
const RuleSet& DefaultRuleSet();

// Context tags of one grapheme: {Consonant, Solar|Lunar} for the 28 base
// consonants and hamza seats, {Consonant} for ة, {Vowel} for the short
// vowel marks, tanween and the madd letters ا ى, {} for shadda and sukun.
std::set<ContextTag> Classify(char32_t grapheme);

// Converts one normalized word to phoneme labels (no boundary labels).
// Consults the lexicon first; handles the definite article (solar
// assimilation / lunar lam) before rule scanning. `lex` may be null.
PhonemeSeq TranscribeWord(std::u32string_view word, const RuleSet& rules,
                          const Lexicon* lex, bool at_sentence_start,
                          bool at_sentence_end,
                          const TranscribeOptions& opts = {});

// Full token stream: each sentence wrapped in "#", words separated by "_",
// Number tokens expanded to Arabic words first.
PhonemeSeq TranscribeText(const std::vector<Token>& tokens,
                          const RuleSet& rules, const Lexicon* lex,
                          const TranscribeOptions& opts = {});

// Adjacent pairs of a boundary-wrapped sequence.
DiphoneSeq ToDiphones(const PhonemeSeq& seq);

// Unambiguous inventory key for a diphone: labels joined by '+'.
std::string DiphoneKey(const Diphone& d);

// Carrier word (logatome) containing the given diphone exactly once when
// transcribed in isolation. The pause label "_" is treated like "#": both
// are recorded against the same silence carrier. Returns UTF-8 Arabic.
std::string GenerateLogatome(const Diphone& d);

}  // namespace qiraa

#endif  // QIRAA_G2P_H_
