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

#ifndef QIRAA_PHONEMES_H_
#define QIRAA_PHONEMES_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qiraa {

// Phoneme label table. All labels are ASCII:
//   28 consonants:  ' b t th j hh kh d dh r z s sh ss dd tt zz ain gh f q k
//                   l m n h w y
//   6 vowels:       a u i aa uu ii
//   boundary:       #   (sentence start/end)
//   pause:          _   (inter-word silence)
//
// Hamza and all its seats (ء أ إ ؤ ئ) share the glottal-stop label '.
// Emphatic consonants use doubled letters (ss = ص, dd = ض, tt = ط, zz = ظ),
// hh = ح, kh = خ, ain = ع, gh = غ.

inline constexpr std::string_view kBoundaryLabel = "#";
inline constexpr std::string_view kPauseLabel = "_";

const std::array<std::string_view, 28>& ConsonantLabels();
const std::array<std::string_view, 6>& VowelLabels();

bool IsValidLabel(std::string_view label);
bool IsConsonantLabel(std::string_view label);
bool IsVowelLabel(std::string_view label);
bool IsBoundaryLabel(std::string_view label);  // "#" or "_"

// Arabic codepoints (Unicode block 0600-06FF).
inline constexpr char32_t kHamza = U'ء';          // ء
inline constexpr char32_t kAlefMadda = U'آ';      // آ
inline constexpr char32_t kAlefHamzaAbove = U'أ'; // أ
inline constexpr char32_t kWawHamza = U'ؤ';       // ؤ
inline constexpr char32_t kAlefHamzaBelow = U'إ'; // إ
inline constexpr char32_t kYehHamza = U'ئ';       // ئ
inline constexpr char32_t kAlef = U'ا';           // ا
inline constexpr char32_t kTehMarbuta = U'ة';     // ة
inline constexpr char32_t kLam = U'ل';            // ل
inline constexpr char32_t kWaw = U'و';            // و
inline constexpr char32_t kAlefMaksura = U'ى';    // ى
inline constexpr char32_t kYeh = U'ي';            // ي
inline constexpr char32_t kAlefWasla = U'ٱ';      // ٱ
inline constexpr char32_t kTatweel = U'ـ';        // ـ

inline constexpr char32_t kFathatan = U'ً';
inline constexpr char32_t kDammatan = U'ٌ';
inline constexpr char32_t kKasratan = U'ٍ';
inline constexpr char32_t kFatha = U'َ';
inline constexpr char32_t kDamma = U'ُ';
inline constexpr char32_t kKasra = U'ِ';
inline constexpr char32_t kShadda = U'ّ';
inline constexpr char32_t kSukun = U'ْ';

bool IsArabicLetter(char32_t cp);   // base letters incl. ة ى and hamza seats
bool IsDiacritic(char32_t cp);      // 064B..0652
bool IsShortVowelMark(char32_t cp); // fatha damma kasra
bool IsTanween(char32_t cp);

// The 28 base consonant letters (hamza ء stands for all its seats).
const std::u32string& BaseConsonants();
bool IsSolarLetter(char32_t cp);
bool IsLunarLetter(char32_t cp);

// Label for a consonant letter (hamza seats map to '), none for non-consonant
// codepoints such as ا, ة, ى or diacritics.
std::optional<std::string> LabelForLetter(char32_t cp);

// Inverse of LabelForLetter over the 28 base consonants.
std::optional<char32_t> LetterForLabel(std::string_view label);

}  // namespace qiraa

#endif  // QIRAA_PHONEMES_H_
