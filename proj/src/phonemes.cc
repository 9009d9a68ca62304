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

#include "qiraa/phonemes.h"

#include <algorithm>
#include <unordered_map>

namespace qiraa {

namespace {

struct LetterRow {
  char32_t letter;
  std::string_view label;
  bool solar;
};

// The 28 base consonants in abjad-table order, with solar/lunar class.
constexpr LetterRow kLetterTable[] = {
    {U'ء', "'", false},   // ء
    {U'ب', "b", false},   // ب
    {U'ت', "t", true},    // ت
    {U'ث', "th", true},   // ث
    {U'ج', "j", false},   // ج
    {U'ح', "hh", false},  // ح
    {U'خ', "kh", false},  // خ
    {U'د', "d", true},    // د
    {U'ذ', "dh", true},   // ذ
    {U'ر', "r", true},    // ر
    {U'ز', "z", true},    // ز
    {U'س', "s", true},    // س
    {U'ش', "sh", true},   // ش
    {U'ص', "ss", true},   // ص
    {U'ض', "dd", true},   // ض
    {U'ط', "tt", true},   // ط
    {U'ظ', "zz", true},   // ظ
    {U'ع', "ain", false}, // ع
    {U'غ', "gh", false},  // غ
    {U'ف', "f", false},   // ف
    {U'ق', "q", false},   // ق
    {U'ك', "k", false},   // ك
    {U'ل', "l", true},    // ل
    {U'م', "m", false},   // م
    {U'ن', "n", true},    // ن
    {U'ه', "h", false},   // ه
    {U'و', "w", false},   // و
    {U'ي', "y", false},   // ي
};

constexpr std::array<std::string_view, 6> kVowels = {"a",  "u",  "i",
                                                     "aa", "uu", "ii"};

bool IsHamzaSeat(char32_t cp) {
  return cp == kHamza || cp == kAlefHamzaAbove || cp == kAlefHamzaBelow ||
         cp == kWawHamza || cp == kYehHamza;
}

}  // namespace

const std::array<std::string_view, 28>& ConsonantLabels() {
  static const std::array<std::string_view, 28> labels = [] {
    std::array<std::string_view, 28> a{};
    for (size_t i = 0; i < 28; ++i) a[i] = kLetterTable[i].label;
    return a;
  }();
  return labels;
}

const std::array<std::string_view, 6>& VowelLabels() { return kVowels; }

bool IsConsonantLabel(std::string_view label) {
  const auto& c = ConsonantLabels();
  return std::find(c.begin(), c.end(), label) != c.end();
}

bool IsVowelLabel(std::string_view label) {
  return std::find(kVowels.begin(), kVowels.end(), label) != kVowels.end();
}

bool IsBoundaryLabel(std::string_view label) {
  return label == kBoundaryLabel || label == kPauseLabel;
}

bool IsValidLabel(std::string_view label) {
  return IsConsonantLabel(label) || IsVowelLabel(label) ||
         IsBoundaryLabel(label);
}

bool IsArabicLetter(char32_t cp) {
  if (cp >= U'ء' && cp <= U'غ') return true;  // ء..غ incl. ة
  if (cp >= U'ف' && cp <= U'ي') return true;  // ف..ي incl. ى
  return false;
}

bool IsDiacritic(char32_t cp) { return cp >= kFathatan && cp <= kSukun; }

bool IsShortVowelMark(char32_t cp) {
  return cp == kFatha || cp == kDamma || cp == kKasra;
}

bool IsTanween(char32_t cp) {
  return cp == kFathatan || cp == kDammatan || cp == kKasratan;
}

const std::u32string& BaseConsonants() {
  static const std::u32string letters = [] {
    std::u32string s;
    for (const auto& row : kLetterTable) s.push_back(row.letter);
    return s;
  }();
  return letters;
}

bool IsSolarLetter(char32_t cp) {
  for (const auto& row : kLetterTable)
    if (row.letter == cp) return row.solar;
  return false;
}

bool IsLunarLetter(char32_t cp) {
  if (IsHamzaSeat(cp) || cp == kAlefMadda) return true;  // all hamza carriers
  for (const auto& row : kLetterTable)
    if (row.letter == cp) return !row.solar;
  return false;
}

std::optional<std::string> LabelForLetter(char32_t cp) {
  if (IsHamzaSeat(cp)) return std::string("'");
  for (const auto& row : kLetterTable)
    if (row.letter == cp) return std::string(row.label);
  return std::nullopt;
}

std::optional<char32_t> LetterForLabel(std::string_view label) {
  for (const auto& row : kLetterTable)
    if (row.label == label) return row.letter;
  return std::nullopt;
}

}  // namespace qiraa
