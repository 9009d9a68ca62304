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

#include "qiraa/text_norm.h"

#include <cctype>

#include "qiraa/error.h"
#include "qiraa/phonemes.h"
#include "qiraa/utf8.h"

namespace qiraa {

namespace {

// Arabic Presentation Forms-B positional variants: a contiguous run of
// presentation codepoints per base letter (isolated/final or
// isolated/final/initial/medial).
struct FormRun {
  char32_t first;
  int count;
  char32_t base;
};

constexpr FormRun kFormsB[] = {
    {U'ﹰ', 2, U'ً'},  // fathatan (isolated, on tatweel)
    {U'ﹲ', 2, U'ٌ'},  // dammatan
    {U'ﹴ', 1, U'ٍ'},  // kasratan
    {U'ﹶ', 2, U'َ'},  // fatha
    {U'ﹸ', 2, U'ُ'},  // damma
    {U'ﹺ', 2, U'ِ'},  // kasra
    {U'ﹼ', 2, U'ّ'},  // shadda
    {U'ﹾ', 2, U'ْ'},  // sukun
    {U'ﺀ', 1, U'ء'},  // ء
    {U'ﺁ', 2, U'آ'},  // آ
    {U'ﺃ', 2, U'أ'},  // أ
    {U'ﺅ', 2, U'ؤ'},  // ؤ
    {U'ﺇ', 2, U'إ'},  // إ
    {U'ﺉ', 4, U'ئ'},  // ئ
    {U'ﺍ', 2, U'ا'},  // ا
    {U'ﺏ', 4, U'ب'},  // ب
    {U'ﺓ', 2, U'ة'},  // ة
    {U'ﺕ', 4, U'ت'},  // ت
    {U'ﺙ', 4, U'ث'},  // ث
    {U'ﺝ', 4, U'ج'},  // ج
    {U'ﺡ', 4, U'ح'},  // ح
    {U'ﺥ', 4, U'خ'},  // خ
    {U'ﺩ', 2, U'د'},  // د
    {U'ﺫ', 2, U'ذ'},  // ذ
    {U'ﺭ', 2, U'ر'},  // ر
    {U'ﺯ', 2, U'ز'},  // ز
    {U'ﺱ', 4, U'س'},  // س
    {U'ﺵ', 4, U'ش'},  // ش
    {U'ﺹ', 4, U'ص'},  // ص
    {U'ﺽ', 4, U'ض'},  // ض
    {U'ﻁ', 4, U'ط'},  // ط
    {U'ﻅ', 4, U'ظ'},  // ظ
    {U'ﻉ', 4, U'ع'},  // ع
    {U'ﻍ', 4, U'غ'},  // غ
    {U'ﻑ', 4, U'ف'},  // ف
    {U'ﻕ', 4, U'ق'},  // ق
    {U'ﻙ', 4, U'ك'},  // ك
    {U'ﻝ', 4, U'ل'},  // ل
    {U'ﻡ', 4, U'م'},  // م
    {U'ﻥ', 4, U'ن'},  // ن
    {U'ﻩ', 4, U'ه'},  // ه
    {U'ﻭ', 2, U'و'},  // و
    {U'ﻯ', 2, U'ى'},  // ى
    {U'ﻱ', 4, U'ي'},  // ي
};

// Lam-alef ligatures: two letters each.
struct LamAlef {
  char32_t first;  // isolated form; final form is first+1
  char32_t alef;
};

constexpr LamAlef kLamAlef[] = {
    {U'ﻵ', U'آ'},  // لآ
    {U'ﻷ', U'أ'},  // لأ
    {U'ﻹ', U'إ'},  // لإ
    {U'ﻻ', U'ا'},  // لا
};

bool IsSentenceFinalPunct(char32_t cp) {
  return cp == U'.' || cp == U'!' || cp == U'؟' /* ؟ */ ||
         cp == U'؛' /* ؛ */;
}

bool IsOtherPunct(char32_t cp) {
  return cp == U'،' /* ، */ || cp == U',' || cp == U':' || cp == U';' ||
         cp == U'?' || cp == U'"' || cp == U'(' || cp == U')';
}

bool IsSpace(char32_t cp) {
  return cp == U' ' || cp == U'\t' || cp == U'\n' || cp == U'\r' ||
         cp == U' ';
}

const char32_t* const kUnitNames[] = {
    U"صِفْر",                                  // صِفْر
    U"وَاحِد",                            // وَاحِد
    U"اِثْنَان",                // اِثْنَان
    U"ثَلَاثَة",                // ثَلَاثَة
    U"أَرْبَعَة",          // أَرْبَعَة
    U"خَمْسَة",                      // خَمْسَة
    U"سِتَّة",                            // سِتَّة
    U"سَبْعَة",                      // سَبْعَة
    U"ثَمَانِيَة",    // ثَمَانِيَة
    U"تِسْعَة",                      // تِسْعَة
};

const char32_t* const kTensNames[] = {
    U"عِشْرُون",                // عِشْرُون
    U"ثَلَاثُون",          // ثَلَاثُون
    U"أَرْبَعُون",    // أَرْبَعُون
    U"خَمْسُون",                // خَمْسُون
    U"سِتُّون",                      // سِتُّون
    U"سَبْعُون",                // سَبْعُون
    U"ثَمَانُون",          // ثَمَانُون
    U"تِسْعُون",                // تِسْعُون
};

// Hundred multipliers for 300..900 (index 0 = three).
const char32_t* const kHundredMults[] = {
    U"ثَلَاثُ",            // ثَلَاثُ
    U"أَرْبَعُ",      // أَرْبَعُ
    U"خَمْسُ",                  // خَمْسُ
    U"سِتُّ",                        // سِتُّ
    U"سَبْعُ",                  // سَبْعُ
    U"ثَمَانِي",      // ثَمَانِي
    U"تِسْعُ",                  // تِسْعُ
};

const char32_t* kHundred = U"مِئَة";            // مِئَة
const char32_t* kTwoHundred =
    U"مِئَتَان";                 // مِئَتَان
const char32_t* kThousand = U"أَلْف";            // أَلْف
const char32_t* kTwoThousand =
    U"أَلْفَان";                 // أَلْفَان
const char32_t* kThousands =
    U"آلَاف";                                   // آلَاف
const char32_t* kEleven = U"أَحَدَ";        // أَحَدَ
const char32_t* kTwelve =
    U"اِثْنَا";                       // اِثْنَا
const char32_t* kTeenTen = U"عَشَرَ";       // عَشَرَ
const char32_t* kTen = U"عَشَرَة";     // عَشَرَة
const char32_t* kWa = U"وَ";                                    // وَ

// Words for 1..999.
std::vector<std::u32string> ExpandBelowThousand(long v) {
  std::vector<std::u32string> words;
  if (v >= 100) {
    long h = v / 100;
    if (h == 1) {
      words.push_back(kHundred);
    } else if (h == 2) {
      words.push_back(kTwoHundred);
    } else {
      words.push_back(kHundredMults[h - 3]);
      words.push_back(kHundred);
    }
    v %= 100;
    if (v == 0) return words;
  }
  std::vector<std::u32string> small;
  if (v >= 11 && v <= 19) {
    if (v == 11) {
      small = {kEleven, kTeenTen};
    } else if (v == 12) {
      small = {kTwelve, kTeenTen};
    } else {
      std::u32string unit = kUnitNames[v - 10];
      unit.push_back(kFatha);  // accusative linking vowel of the teens
      small = {unit, kTeenTen};
    }
  } else if (v == 10) {
    small = {kTen};
  } else if (v >= 20) {
    long t = v / 10, u = v % 10;
    if (u != 0) small.push_back(kUnitNames[u]);
    std::u32string tens = kTensNames[t - 2];
    if (u != 0) tens = std::u32string(kWa) + tens;
    small.push_back(tens);
  } else if (v >= 1) {
    small = {kUnitNames[v]};
  }
  if (!words.empty() && !small.empty()) small.front() = kWa + small.front();
  words.insert(words.end(), small.begin(), small.end());
  return words;
}

}  // namespace

std::u32string DecomposeLigature(char32_t cp) {
  for (const auto& la : kLamAlef) {
    if (cp == la.first || cp == la.first + 1)
      return {kLam, la.alef};
  }
  for (const auto& run : kFormsB) {
    if (cp >= run.first && cp < run.first + static_cast<char32_t>(run.count))
      return {run.base};
  }
  return {cp};
}

std::vector<Token> NormalizeText(std::string_view raw,
                                 const NormalizeOptions& opts) {
  const std::u32string input = utf8::Decode(raw);

  std::vector<Token> tokens;
  Token current;
  bool has_letter = false;
  bool has_digit = false;

  auto flush = [&](long at) {
    if (current.surface.empty()) return;
    if (has_letter && has_digit)
      throw Error(ErrorCode::kUnsupportedToken,
                  "token mixes letters and digits near offset " +
                      std::to_string(at),
                  at);
    current.kind = has_digit ? TokenKind::kNumber : TokenKind::kWord;
    tokens.push_back(current);
    current = Token{};
    has_letter = has_digit = false;
  };

  for (size_t i = 0; i < input.size(); ++i) {
    char32_t cp = input[i];
    if (cp == kTatweel) continue;
    if (cp == kAlefWasla) cp = kAlef;

    if (IsSpace(cp)) {
      flush(static_cast<long>(i));
      continue;
    }
    if (IsSentenceFinalPunct(cp) || IsOtherPunct(cp)) {
      flush(static_cast<long>(i));
      if (IsSentenceFinalPunct(cp) && !tokens.empty())
        tokens.back().sentence_final = true;
      if (opts.keep_punct) {
        tokens.push_back(
            Token{std::u32string(1, cp), TokenKind::kPunctuation, false});
      }
      continue;
    }
    if (cp >= U'٠' && cp <= U'٩') {  // Arabic-Indic digits
      cp = U'0' + (cp - U'٠');
    }
    if (cp >= U'0' && cp <= U'9') {
      current.surface.push_back(cp);
      has_digit = true;
      continue;
    }
    if (cp >= U'ﭐ' && cp <= U'﻿') {
      std::u32string expanded = DecomposeLigature(cp);
      if (expanded.size() == 1 && expanded[0] == cp)
        throw Error(ErrorCode::kUnsupportedCodepoint,
                    "unmapped presentation form at offset " + std::to_string(i),
                    static_cast<long>(i));
      current.surface += expanded;
      has_letter = true;
      continue;
    }
    if (IsArabicLetter(cp) || IsDiacritic(cp)) {
      current.surface.push_back(cp);
      has_letter = true;
      continue;
    }
    throw Error(ErrorCode::kUnsupportedCodepoint,
                "codepoint U+" + std::to_string(static_cast<long>(cp)) +
                    " at offset " + std::to_string(i),
                static_cast<long>(i));
  }
  flush(static_cast<long>(input.size()));
  return tokens;
}

std::vector<std::u32string> ExpandNumber(long value) {
  if (value < 0 || value > 9999)
    throw Error(ErrorCode::kOutOfRange,
                "number " + std::to_string(value) + " outside 0..9999");
  if (value == 0) return {kUnitNames[0]};

  std::vector<std::u32string> words;
  if (value >= 1000) {
    long k = value / 1000;
    if (k == 1) {
      words.push_back(kThousand);
    } else if (k == 2) {
      words.push_back(kTwoThousand);
    } else {
      std::u32string mult = kUnitNames[k];
      mult.push_back(kDamma);  // construct-state vowel before آلاف
      words.push_back(mult);
      words.push_back(kThousands);
    }
    value %= 1000;
  }
  if (value > 0) {
    auto rest = ExpandBelowThousand(value);
    if (!words.empty()) rest.front() = kWa + rest.front();
    words.insert(words.end(), rest.begin(), rest.end());
  }
  return words;
}

std::string FormatTokens(const std::vector<Token>& tokens) {
  std::string out;
  for (const auto& t : tokens) {
    out += utf8::Encode(t.surface);
    out += '\t';
    switch (t.kind) {
      case TokenKind::kWord: out += "word"; break;
      case TokenKind::kNumber: out += "number"; break;
      case TokenKind::kPunctuation: out += "punct"; break;
    }
    out += '\t';
    out += t.sentence_final ? "1" : "0";
    out += '\n';
  }
  return out;
}

std::string ReserializeTokens(const std::vector<Token>& tokens) {
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out += ' ';
    out += utf8::Encode(t.surface);
    if (t.sentence_final) out += '.';
  }
  return out;
}

}  // namespace qiraa
