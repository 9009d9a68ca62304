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

#include "qiraa/eval.h"

#include <cstdint>
#include <sstream>

#include "qiraa/error.h"
#include "qiraa/text_norm.h"

namespace qiraa {

namespace {

constexpr struct {
  Category category;
  const char* name;
} kCategoryNames[] = {
    {Category::kShortVowels, "short_vowels"},
    {Category::kLongVowels, "long_vowels"},
    {Category::kSolarConsonants, "solar_consonants"},
    {Category::kLunarConsonants, "lunar_consonants"},
    {Category::kIsolatedWords, "isolated_words"},
    {Category::kSentences, "sentences"},
    {Category::kNumbers, "numbers"},
    {Category::kExceptionWords, "exception_words"},
};

std::string JoinLabels(const PhonemeSeq& seq) {
  std::string out;
  for (const auto& label : seq) {
    if (!out.empty()) out += ' ';
    out += label;
  }
  return out;
}

}  // namespace

const char* CategoryName(Category c) {
  for (const auto& row : kCategoryNames)
    if (row.category == c) return row.name;
  return "?";
}

Category ParseCategory(std::string_view name) {
  for (const auto& row : kCategoryNames)
    if (name == row.name) return row.category;
  throw Error(ErrorCode::kMalformedLine,
              "unknown category '" + std::string(name) + "'");
}

std::vector<GoldenCase> LoadCorpus(std::string_view text) {
  std::vector<GoldenCase> cases;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string cat, input, labels;
    if (!std::getline(ls, cat, '\t') || !std::getline(ls, input, '\t') ||
        !std::getline(ls, labels))
      throw Error(ErrorCode::kMalformedLine,
                  "expected 3 tab-separated fields on line " +
                      std::to_string(line_no),
                  line_no);
    GoldenCase c;
    c.category = ParseCategory(cat);
    c.input = input;
    std::istringstream ws(labels);
    std::string label;
    while (ws >> label) c.expected.push_back(label);
    cases.push_back(std::move(c));
  }
  return cases;
}

int SuccessRateTenths(int passed, int tested) {
  if (tested <= 0) throw Error(ErrorCode::kZeroTested, "tested = 0");
  if (passed < 0 || passed > tested)
    throw Error(ErrorCode::kOutOfRange, "passed outside 0..tested");
  // round(passed * 1000 / tested), half away from zero; operands positive.
  return static_cast<int>(
      (static_cast<int64_t>(passed) * 2000 + tested) / (2LL * tested));
}

double SuccessRate(int passed, int tested) {
  return SuccessRateTenths(passed, tested) / 10.0;
}

std::string FormatPercentTenths(int tenths) {
  return std::to_string(tenths / 10) + "." + std::to_string(tenths % 10);
}

EvalReport RunGolden(const std::vector<GoldenCase>& corpus,
                     const RuleSet& rules, const Lexicon* lex,
                     const TranscribeOptions& opts) {
  const long n = static_cast<long>(corpus.size());
  std::vector<char> ok(corpus.size(), 0);
  std::vector<std::string> diag(corpus.size());

#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    const auto& c = corpus[static_cast<size_t>(i)];
    try {
      PhonemeSeq got = TranscribeText(NormalizeText(c.input), rules, lex, opts);
      if (got == c.expected) {
        ok[static_cast<size_t>(i)] = 1;
      } else {
        diag[static_cast<size_t>(i)] =
            "expected [" + JoinLabels(c.expected) + "] got [" +
            JoinLabels(got) + "]";
      }
    } catch (const Error& e) {
      diag[static_cast<size_t>(i)] = e.what();
    }
  }

  EvalReport report;
  for (size_t i = 0; i < corpus.size(); ++i) {
    auto& stats = report.per_category[corpus[i].category];
    ++stats.tested;
    ++report.tested;
    if (ok[i]) {
      ++stats.passed;
      ++report.passed;
    } else {
      report.failures.emplace_back(corpus[i].input, diag[i]);
    }
  }
  return report;
}

std::string FormatReport(const EvalReport& report) {
  std::ostringstream out;
  out << "category\ttested\tpassed\tsr\n";
  for (const auto& row : kCategoryNames) {
    auto it = report.per_category.find(row.category);
    if (it == report.per_category.end()) continue;
    out << row.name << '\t' << it->second.tested << '\t' << it->second.passed
        << '\t'
        << FormatPercentTenths(
               SuccessRateTenths(it->second.passed, it->second.tested))
        << '\n';
  }
  out << "overall\t" << report.tested << '\t' << report.passed << '\t'
      << FormatPercentTenths(SuccessRateTenths(report.passed, report.tested))
      << '\n';
  for (const auto& [input, why] : report.failures)
    out << "FAIL\t" << input << '\t' << why << '\n';
  return out.str();
}

}  // namespace qiraa
