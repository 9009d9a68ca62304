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

#ifndef QIRAA_EVAL_H_
#define QIRAA_EVAL_H_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qiraa/g2p.h"

namespace qiraa {

enum class Category {
  kShortVowels,
  kLongVowels,
  kSolarConsonants,
  kLunarConsonants,
  kIsolatedWords,
  kSentences,
  kNumbers,
  kExceptionWords,
};

const char* CategoryName(Category c);
Category ParseCategory(std::string_view name);  // throws kMalformedLine

struct GoldenCase {
  Category category = Category::kIsolatedWords;
  std::string input;         // raw UTF-8 text
  PhonemeSeq expected;       // space-joined labels in the corpus file
};

// Corpus TSV: category TAB input TAB expected-labels. '#' lines comment.
std::vector<GoldenCase> LoadCorpus(std::string_view text);

struct CategoryStats {
  int tested = 0;
  int passed = 0;
};

struct EvalReport {
  std::map<Category, CategoryStats> per_category;
  int tested = 0;
  int passed = 0;
  // input and diagnostic for every failed case, corpus order.
  std::vector<std::pair<std::string, std::string>> failures;
};

// Success rate in tenths of a percent: round(passed / tested * 1000).
// Throws kZeroTested. (96, 100) -> 960.
int SuccessRateTenths(int passed, int tested);

// Same, as a percentage value; (96, 100) -> 96.0 exactly.
double SuccessRate(int passed, int tested);

std::string FormatPercentTenths(int tenths);  // 960 -> "96.0"

// Runs every case through normalize + transcribe; a case passes iff the
// phoneme sequence matches exactly. Transcription errors fail the case and
// are listed. Cases are evaluated in parallel.
EvalReport RunGolden(const std::vector<GoldenCase>& corpus,
                     const RuleSet& rules, const Lexicon* lex,
                     const TranscribeOptions& opts = {});

std::string FormatReport(const EvalReport& report);

}  // namespace qiraa

#endif  // QIRAA_EVAL_H_
