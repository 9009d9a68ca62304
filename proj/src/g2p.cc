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

#include "qiraa/g2p.h"

#include <algorithm>
#include <sstream>

#include "qiraa/builtin_data.h"
#include "qiraa/error.h"
#include "qiraa/phonemes.h"
#include "qiraa/utf8.h"

namespace qiraa {

namespace {

std::string Trim(std::string_view s) {
  size_t b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return "";
  size_t e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

bool IsConsonantLetter(char32_t cp) {
  return LabelForLetter(cp).has_value() || cp == kAlefMadda ||
         cp == kTehMarbuta;
}

ContextClass ParseContext(const std::string& token, int line_no) {
  if (token == "#") return {ContextTag::kSentenceStart, 0};
  if (token == "$") return {ContextTag::kSentenceEnd, 0};
  if (token == "§") return {ContextTag::kWordBoundary, 0};
  if (token == "C") return {ContextTag::kConsonant, 0};
  if (token == "V") return {ContextTag::kVowel, 0};
  if (token == "SC") return {ContextTag::kSolar, 0};
  if (token == "LC") return {ContextTag::kLunar, 0};
  if (token == "*") return {ContextTag::kAny, 0};
  std::u32string cps = utf8::Decode(token);
  if (cps.size() == 3 && (cps.front() == U'\'' || cps.front() == U'"') &&
      cps.back() == cps.front()) {
    return {ContextTag::kLiteral, cps[1]};
  }
  if (cps.size() == 1) return {ContextTag::kLiteral, cps[0]};
  throw Error(ErrorCode::kUnknownClass,
              "context '" + token + "' on line " + std::to_string(line_no),
              line_no);
}

// Specificity rank of a context: smaller is more specific.
int ContextRank(const ContextClass& c) {
  switch (c.tag) {
    case ContextTag::kLiteral:
    case ContextTag::kSentenceStart:
    case ContextTag::kSentenceEnd:
    case ContextTag::kWordBoundary:
      return 0;
    case ContextTag::kSolar:
    case ContextTag::kLunar:
      return 1;
    case ContextTag::kConsonant:
    case ContextTag::kVowel:
      return 2;
    case ContextTag::kAny:
      return 3;
  }
  return 3;
}

struct Matcher {
  std::u32string_view word;
  bool at_start;
  bool at_end;

  bool MatchSide(const ContextClass& ctx, long index, bool is_left) const {
    if (ctx.tag == ContextTag::kAny) return true;
    bool at_boundary =
        is_left ? index < 0 : index >= static_cast<long>(word.size());
    if (at_boundary) {
      switch (ctx.tag) {
        case ContextTag::kWordBoundary:
          return true;
        case ContextTag::kSentenceStart:
          return is_left && at_start;
        case ContextTag::kSentenceEnd:
          return !is_left && at_end;
        default:
          return false;
      }
    }
    char32_t g = word[static_cast<size_t>(index)];
    switch (ctx.tag) {
      case ContextTag::kLiteral:
        return g == ctx.literal;
      case ContextTag::kConsonant:
        return IsConsonantLetter(g);
      case ContextTag::kSolar:
        return IsSolarLetter(g);
      case ContextTag::kLunar:
        return IsLunarLetter(g);
      case ContextTag::kVowel:
        return IsShortVowelMark(g) || IsTanween(g) || g == kAlef ||
               g == kAlefMaksura;
      default:
        return false;
    }
  }

  // First rule (in specificity order) matching at position p, or null.
  const PronRule* Find(const std::vector<PronRule>& rules, size_t p) const {
    for (const auto& r : rules) {
      if (p + r.focus.size() > word.size()) continue;
      if (word.substr(p, r.focus.size()) != r.focus) continue;
      if (!MatchSide(r.left, static_cast<long>(p) - 1, true)) continue;
      if (!MatchSide(r.right, static_cast<long>(p + r.focus.size()), false))
        continue;
      return &r;
    }
    return nullptr;
  }
};

// Moves shadda to the front of each run of combining marks so that the
// focus-2 gemination rules see <letter, shadda, vowel...> regardless of the
// mark order in the input.
std::u32string CanonicalizeMarkOrder(std::u32string_view word) {
  std::u32string out;
  out.reserve(word.size());
  size_t i = 0;
  while (i < word.size()) {
    out.push_back(word[i]);
    size_t j = i + 1;
    std::u32string marks;
    bool shadda = false;
    while (j < word.size() && IsDiacritic(word[j])) {
      if (word[j] == kShadda)
        shadda = true;
      else
        marks.push_back(word[j]);
      ++j;
    }
    if (shadda) out.push_back(kShadda);
    out += marks;
    i = j;
  }
  return out;
}

// Detects the definite article ال at the start of the word: plain alef,
// optional fatha, lam carrying no vowel, then a consonant letter. Returns
// the index of that consonant, or 0 when the word does not start with the
// article.
size_t ArticleConsonantIndex(std::u32string_view w) {
  size_t i = 0;
  if (i >= w.size() || w[i] != kAlef) return 0;
  ++i;
  if (i < w.size() && w[i] == kFatha) ++i;
  if (i >= w.size() || w[i] != kLam) return 0;
  ++i;
  if (i < w.size() && w[i] == kSukun) ++i;
  // A vowelled or geminated lam is an ordinary consonant, not the article;
  // in that case a mark follows and the letter test below fails.
  if (i >= w.size() || !IsConsonantLetter(w[i])) return 0;
  return i;
}

}  // namespace

RuleSet RuleSet::Parse(std::string_view text) {
  RuleSet set;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string trimmed = Trim(line);
    if (trimmed.empty()) continue;
    if (trimmed[0] == '#') {
      // A rule whose LEFT is the sentence-start sign still parses: comments
      // are '#' lines that do not continue with a field separator.
      size_t next = trimmed.find_first_not_of(" \t", 1);
      if (next == std::string::npos || trimmed[next] != ';') continue;
    }
    std::vector<std::string> fields;
    size_t pos = 0;
    while (true) {
      size_t semi = trimmed.find(';', pos);
      if (semi == std::string::npos) {
        fields.push_back(Trim(std::string_view(trimmed).substr(pos)));
        break;
      }
      fields.push_back(Trim(std::string_view(trimmed).substr(pos, semi - pos)));
      pos = semi + 1;
    }
    if (fields.size() != 4)
      throw Error(ErrorCode::kUnknownClass,
                  "expected 4 ';'-separated fields on line " +
                      std::to_string(line_no),
                  line_no);

    PronRule rule;
    rule.left = ParseContext(fields[0], line_no);
    rule.right = ParseContext(fields[2], line_no);
    rule.focus = utf8::Decode(fields[1]);
    if (rule.focus.empty())
      throw Error(ErrorCode::kEmptyFocus,
                  "empty focus on line " + std::to_string(line_no), line_no);
    if (rule.focus.size() > 3)
      throw Error(ErrorCode::kEmptyFocus,
                  "focus longer than 3 graphemes on line " +
                      std::to_string(line_no),
                  line_no);
    rule.source_line = line_no;
    if (fields[3] != "∅") {  // ∅ marks an empty output
      std::istringstream labels(fields[3]);
      std::string label;
      while (labels >> label) {
        if (!IsValidLabel(label))
          throw Error(ErrorCode::kUnknownPhonemeLabel,
                      "label '" + label + "' on line " + std::to_string(line_no),
                      line_no);
        rule.output.push_back(label);
      }
    }
    set.rules_.push_back(std::move(rule));
  }
  std::stable_sort(set.rules_.begin(), set.rules_.end(),
                   [](const PronRule& a, const PronRule& b) {
                     if (a.focus.size() != b.focus.size())
                       return a.focus.size() > b.focus.size();
                     int ra = ContextRank(a.left) + ContextRank(a.right);
                     int rb = ContextRank(b.left) + ContextRank(b.right);
                     return ra < rb;
                   });
  return set;
}

const RuleSet& DefaultRuleSet() {
  static const RuleSet rules = RuleSet::Parse(kBuiltinRules);
  return rules;
}

std::set<ContextTag> Classify(char32_t g) {
  std::set<ContextTag> tags;
  if (auto label = LabelForLetter(g)) {
    tags.insert(ContextTag::kConsonant);
    tags.insert(IsSolarLetter(g) ? ContextTag::kSolar : ContextTag::kLunar);
    return tags;
  }
  if (g == kAlefMadda) return {ContextTag::kConsonant, ContextTag::kLunar};
  if (g == kTehMarbuta) return {ContextTag::kConsonant};
  if (IsShortVowelMark(g) || IsTanween(g)) return {ContextTag::kVowel};
  if (g == kAlef || g == kAlefMaksura) return {ContextTag::kVowel};
  if (g == kShadda || g == kSukun) return {};
  throw Error(ErrorCode::kUnknownGrapheme,
              "grapheme U+" + std::to_string(static_cast<long>(g)));
}

PhonemeSeq TranscribeWord(std::u32string_view word, const RuleSet& rules,
                          const Lexicon* lex, bool at_sentence_start,
                          bool at_sentence_end, const TranscribeOptions& opts) {
  std::u32string w(word);
  if (lex) {
    if (auto hit = lex->Lookup(w)) w = hit->corrected;
  }
  w = CanonicalizeMarkOrder(w);

  Matcher m{w, at_sentence_start, at_sentence_end};
  PhonemeSeq out;
  size_t p = 0;

  if (size_t c = ArticleConsonantIndex(w)) {
    out.push_back("a");
    char32_t letter = w[c];
    if (IsSolarLetter(letter)) {
      // Lam is silent and the solar consonant geminates. A written shadda
      // already doubles it; otherwise pre-emit the consonant once.
      bool has_shadda = c + 1 < w.size() && w[c + 1] == kShadda;
      if (!has_shadda) {
        const PronRule* r = m.Find(rules.rules(), c);
        if (!r)
          throw Error(ErrorCode::kNoRuleMatches,
                      "no rule for article consonant " +
                          utf8::Encode(letter),
                      static_cast<long>(c));
        out.insert(out.end(), r->output.begin(), r->output.end());
      }
    } else {
      out.push_back("l");
    }
    p = c;
  }

  while (p < w.size()) {
    const PronRule* r = m.Find(rules.rules(), p);
    if (!r)
      throw Error(ErrorCode::kNoRuleMatches,
                  "no rule matches grapheme " + utf8::Encode(w[p]) +
                      " at position " + std::to_string(p),
                  static_cast<long>(p));
    if (opts.strictness == Strictness::kStrict && r->focus.size() == 1 &&
        IsConsonantLetter(r->focus[0]) && p + 1 < w.size() &&
        !IsDiacritic(w[p + 1])) {
      throw Error(ErrorCode::kMissingDiacritic,
                  "bare consonant " + utf8::Encode(w[p]) + " at position " +
                      std::to_string(p),
                  static_cast<long>(p));
    }
    out.insert(out.end(), r->output.begin(), r->output.end());
    p += r->focus.size();
  }
  return out;
}

PhonemeSeq TranscribeText(const std::vector<Token>& tokens,
                          const RuleSet& rules, const Lexicon* lex,
                          const TranscribeOptions& opts) {
  std::vector<std::vector<std::u32string>> sentences;
  std::vector<std::u32string> current;
  for (const auto& tok : tokens) {
    switch (tok.kind) {
      case TokenKind::kPunctuation:
        break;
      case TokenKind::kWord:
        current.push_back(tok.surface);
        break;
      case TokenKind::kNumber: {
        if (tok.surface.size() > 9)
          throw Error(ErrorCode::kOutOfRange,
                      "number token too long: " + utf8::Encode(tok.surface));
        long value = std::stol(utf8::Encode(tok.surface));
        for (auto& word : ExpandNumber(value)) current.push_back(word);
        break;
      }
    }
    if (tok.sentence_final && !current.empty()) {
      sentences.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) sentences.push_back(std::move(current));

  PhonemeSeq out;
  for (const auto& sentence : sentences) {
    out.emplace_back(kBoundaryLabel);
    for (size_t i = 0; i < sentence.size(); ++i) {
      if (i > 0) out.emplace_back(kPauseLabel);
      PhonemeSeq word = TranscribeWord(sentence[i], rules, lex, i == 0,
                                       i + 1 == sentence.size(), opts);
      out.insert(out.end(), word.begin(), word.end());
    }
    out.emplace_back(kBoundaryLabel);
  }
  return out;
}

DiphoneSeq ToDiphones(const PhonemeSeq& seq) {
  if (seq.size() < 2 || seq.front() != kBoundaryLabel ||
      seq.back() != kBoundaryLabel)
    throw Error(ErrorCode::kMissingBoundary,
                "sequence must start and end with '#'");
  DiphoneSeq pairs;
  pairs.reserve(seq.size() - 1);
  for (size_t i = 0; i + 1 < seq.size(); ++i)
    pairs.emplace_back(seq[i], seq[i + 1]);
  return pairs;
}

std::string DiphoneKey(const Diphone& d) { return d.first + "+" + d.second; }

namespace {

enum class Slot { kBoundary, kConsonant, kVowel };

Slot SlotOf(const std::string& label) {
  if (IsBoundaryLabel(label)) return Slot::kBoundary;
  if (IsVowelLabel(label)) return Slot::kVowel;
  if (IsConsonantLabel(label)) return Slot::kConsonant;
  throw Error(ErrorCode::kUnknownPhonemeLabel, "label '" + label + "'");
}

char32_t LetterOrThrow(const std::string& label) {
  auto letter = LetterForLabel(label);
  if (!letter)
    throw Error(ErrorCode::kUnknownPhonemeLabel, "label '" + label + "'");
  return *letter;
}

// Grapheme spelling of a vowel label in carrier position.
std::u32string VowelGraphemes(const std::string& v) {
  if (v == "a") return {kFatha};
  if (v == "u") return {kDamma};
  if (v == "i") return {kKasra};
  if (v == "aa") return {kFatha, kAlef};
  if (v == "uu") return {kDamma, kWaw};
  return {kKasra, kYeh};  // ii
}

const char32_t kTeh = U'ت';  // ت carrier consonant
const char32_t kBeh = U'ب';  // ب fallback when the target is ت

}  // namespace

std::string GenerateLogatome(const Diphone& d) {
  Slot a = SlotOf(d.first);
  Slot b = SlotOf(d.second);
  std::u32string w;

  if (a == Slot::kBoundary && b == Slot::kConsonant) {
    // #cata#
    w = {LetterOrThrow(d.second), kFatha, kTeh, kFatha};
  } else if (a == Slot::kBoundary && b == Slot::kVowel) {
    // #vta# — only the short vowels can open an Arabic word.
    if (d.second != "a" && d.second != "u" && d.second != "i")
      throw Error(ErrorCode::kNoTemplateForKind,
                  "no carrier for " + DiphoneKey(d));
    w = {kAlef};
    w += VowelGraphemes(d.second);
    w += {kTeh, kFatha};
  } else if (a == Slot::kConsonant && b == Slot::kBoundary) {
    // #katac#
    w = {U'ك', kFatha, kTeh, kFatha, LetterOrThrow(d.first), kSukun};
  } else if (a == Slot::kVowel && b == Slot::kBoundary) {
    // #katatv#
    w = {U'ك', kFatha, kTeh, kFatha, kTeh};
    w += VowelGraphemes(d.first);
  } else if (a == Slot::kConsonant && b == Slot::kConsonant) {
    // #taccata#
    w = {kTeh, kFatha, LetterOrThrow(d.first), kSukun, LetterOrThrow(d.second),
         kFatha, kTeh, kFatha};
  } else if (a == Slot::kConsonant && b == Slot::kVowel) {
    // #acvta#
    char32_t filler = d.first == "t" ? kBeh : kTeh;
    w = {kAlef, kFatha, LetterOrThrow(d.first)};
    w += VowelGraphemes(d.second);
    w += {filler, kFatha};
  } else if (a == Slot::kVowel && b == Slot::kConsonant) {
    // #atvca#
    char32_t filler = d.second == "t" ? kBeh : kTeh;
    w = {kAlef, kFatha, filler};
    w += VowelGraphemes(d.first);
    w += {LetterOrThrow(d.second), kFatha};
  } else {
    throw Error(ErrorCode::kNoTemplateForKind,
                "no carrier for " + DiphoneKey(d));
  }
  return utf8::Encode(w);
}

}  // namespace qiraa
