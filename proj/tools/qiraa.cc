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

// Command-line front end: normalize | transcribe | diphones | logatomes |
// synth | validate-db | eval. stdout carries data only; diagnostics go to
// stderr. Exit 0 on success, 1 on domain errors, 2 on usage errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "qiraa/error.h"
#include "qiraa/eval.h"
#include "qiraa/g2p.h"
#include "qiraa/inventory.h"
#include "qiraa/lexicon.h"
#include "qiraa/phonemes.h"
#include "qiraa/synth.h"
#include "qiraa/text_norm.h"
#include "qiraa/utf8.h"
#include "qiraa/wav.h"

namespace {

std::string ReadAll(std::istream& in) {
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string ReadFileOrThrow(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw qiraa::Error(qiraa::ErrorCode::kMissingFile, path);
  return ReadAll(f);
}

struct CommonOptions {
  std::string rules_path;
  std::string lexicon_path;
  std::string input_path;
  std::string text;
  bool lenient = false;
  bool no_lexicon = false;

  void Register(CLI::App* cmd) {
    cmd->add_option("--rules", rules_path, "rule file (default: built-in)");
    cmd->add_option("--lexicon", lexicon_path,
                    "exception lexicon (default: built-in)");
    cmd->add_flag("--no-lexicon", no_lexicon, "skip the exception lexicon");
    cmd->add_flag("--lenient", lenient,
                  "assume sukun on bare consonants instead of erroring");
    cmd->add_option("--in", input_path, "input file (default: stdin)");
    cmd->add_option("--text", text, "input text (overrides --in/stdin)");
  }

  std::string Input() const {
    if (!text.empty()) return text;
    if (!input_path.empty()) return ReadFileOrThrow(input_path);
    return ReadAll(std::cin);
  }

  qiraa::RuleSet Rules() const {
    if (rules_path.empty()) return qiraa::DefaultRuleSet();
    return qiraa::RuleSet::Parse(ReadFileOrThrow(rules_path));
  }

  // Empty optional = no lexicon at all.
  std::optional<qiraa::Lexicon> LexiconOrNone() const {
    if (no_lexicon) return std::nullopt;
    if (lexicon_path.empty()) return qiraa::DefaultLexicon();
    return qiraa::Lexicon::Load(ReadFileOrThrow(lexicon_path));
  }

  qiraa::TranscribeOptions Transcribe() const {
    return {lenient ? qiraa::Strictness::kLenient
                    : qiraa::Strictness::kStrict};
  }
};

// Tokens grouped into sentences, one group per sentence.
std::vector<std::vector<qiraa::Token>> SplitSentences(
    const std::vector<qiraa::Token>& tokens) {
  std::vector<std::vector<qiraa::Token>> sentences;
  std::vector<qiraa::Token> current;
  for (const auto& t : tokens) {
    current.push_back(t);
    if (t.sentence_final) {
      sentences.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) sentences.push_back(std::move(current));
  return sentences;
}

std::string JoinLabels(const qiraa::PhonemeSeq& seq) {
  std::string out;
  for (const auto& label : seq) {
    if (!out.empty()) out += ' ';
    out += label;
  }
  return out;
}

// Every unit key a DiphoneFirst synthesis of this text could ask for.
void CollectNeeded(const qiraa::PhonemeSeq& seq,
                   std::set<std::string>* needed) {
  for (const auto& d : qiraa::ToDiphones(seq))
    needed->insert(qiraa::DiphoneKey(d));
  for (const auto& label : seq) needed->insert(label);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qiraa: Standard Arabic text-to-speech pipeline"};
  app.require_subcommand(1);

  CommonOptions norm_opts, trans_opts, diph_opts, log_opts, synth_opts,
      vdb_opts, eval_opts;

  auto* normalize = app.add_subcommand("normalize", "tokenize and clean text");
  bool keep_punct = false;
  norm_opts.Register(normalize);
  normalize->add_flag("--keep-punct", keep_punct,
                      "emit punctuation tokens instead of dropping them");

  auto* transcribe =
      app.add_subcommand("transcribe", "phoneme labels, one sentence per line");
  trans_opts.Register(transcribe);

  auto* diphones =
      app.add_subcommand("diphones", "diphone pairs, one sentence per line");
  diph_opts.Register(diphones);

  auto* logatomes = app.add_subcommand(
      "logatomes", "TSV of diphone key -> carrier word for recording");
  log_opts.Register(logatomes);

  auto* synth = app.add_subcommand("synth", "concatenative synthesis to WAV");
  synth_opts.Register(synth);
  std::string db_path, out_path, mode_name = "diphone";
  int crossfade_ms = 0, silence_ms = 100;
  synth->add_option("--db", db_path,
                    "unit inventory manifest (or env QIRAA_DB)");
  synth->add_option("--out", out_path, "output WAV path")->required();
  synth->add_option("--mode", mode_name, "diphone|phoneme")
      ->check(CLI::IsMember({"diphone", "phoneme"}));
  synth->add_option("--crossfade-ms", crossfade_ms, "linear crossfade at joins")
      ->check(CLI::NonNegativeNumber);
  synth->add_option("--silence-ms", silence_ms, "duration of '#'/'_' units");

  auto* validate_db =
      app.add_subcommand("validate-db", "check unit coverage for a corpus");
  vdb_opts.Register(validate_db);
  std::string vdb_db_path, vdb_corpus;
  validate_db->add_option("--db", vdb_db_path, "manifest (or env QIRAA_DB)");
  validate_db->add_option("--corpus", vdb_corpus,
                          "golden corpus TSV (default: free text input)");

  auto* eval = app.add_subcommand("eval", "golden corpus success rate");
  eval_opts.Register(eval);
  std::string eval_corpus;
  eval->add_option("--corpus", eval_corpus, "golden corpus TSV")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*normalize) {
      auto tokens =
          qiraa::NormalizeText(norm_opts.Input(), {.keep_punct = keep_punct});
      std::cout << qiraa::FormatTokens(tokens);
      return 0;
    }

    auto run_per_sentence = [](const CommonOptions& opts, auto&& emit) {
      auto rules = opts.Rules();
      auto lex = opts.LexiconOrNone();
      auto tokens = qiraa::NormalizeText(opts.Input());
      for (const auto& sentence : SplitSentences(tokens)) {
        auto seq = qiraa::TranscribeText(sentence, rules,
                                         lex ? &*lex : nullptr,
                                         opts.Transcribe());
        if (!seq.empty()) emit(seq);
      }
    };

    if (*transcribe) {
      run_per_sentence(trans_opts, [](const qiraa::PhonemeSeq& seq) {
        std::cout << JoinLabels(seq) << '\n';
      });
      return 0;
    }

    if (*diphones) {
      run_per_sentence(diph_opts, [](const qiraa::PhonemeSeq& seq) {
        std::string line;
        for (const auto& d : qiraa::ToDiphones(seq)) {
          if (!line.empty()) line += ' ';
          line += d.first + "-" + d.second;
        }
        std::cout << line << '\n';
      });
      return 0;
    }

    if (*logatomes) {
      std::set<std::string> keys;
      std::map<std::string, qiraa::Diphone> by_key;
      run_per_sentence(log_opts, [&](const qiraa::PhonemeSeq& seq) {
        for (const auto& d : qiraa::ToDiphones(seq)) {
          by_key.emplace(qiraa::DiphoneKey(d), d);
        }
      });
      for (const auto& [key, d] : by_key)
        std::cout << key << '\t' << qiraa::GenerateLogatome(d) << '\n';
      return 0;
    }

    auto db_or_env = [](std::string path) {
      if (path.empty()) {
        const char* env = std::getenv("QIRAA_DB");
        if (env) path = env;
      }
      if (path.empty())
        throw qiraa::Error(qiraa::ErrorCode::kMissingFile,
                           "no manifest: pass --db or set QIRAA_DB");
      return path;
    };

    if (*synth) {
      auto inv = qiraa::LoadManifest(db_or_env(db_path), silence_ms);
      auto rules = synth_opts.Rules();
      auto lex = synth_opts.LexiconOrNone();
      auto tokens = qiraa::NormalizeText(synth_opts.Input());
      auto seq = qiraa::TranscribeText(tokens, rules, lex ? &*lex : nullptr,
                                       synth_opts.Transcribe());
      auto plan = qiraa::PlanSynthesis(
          seq, inv,
          mode_name == "phoneme" ? qiraa::SynthMode::kPhonemeOnly
                                 : qiraa::SynthMode::kDiphoneFirst);
      auto wave = qiraa::Concatenate(plan, inv, crossfade_ms);
      qiraa::WriteWav(wave, out_path);
      if (plan.fallbacks_used > 0)
        std::cerr << "note: " << plan.fallbacks_used
                  << " diphone(s) fell back to phoneme units\n";
      return 0;
    }

    if (*validate_db) {
      auto inv = qiraa::LoadManifest(db_or_env(vdb_db_path));
      auto rules = vdb_opts.Rules();
      auto lex = vdb_opts.LexiconOrNone();
      std::set<std::string> needed;
      auto opts = vdb_opts.Transcribe();
      if (!vdb_corpus.empty()) {
        for (const auto& c : qiraa::LoadCorpus(ReadFileOrThrow(vdb_corpus)))
          CollectNeeded(qiraa::TranscribeText(qiraa::NormalizeText(c.input),
                                              rules, lex ? &*lex : nullptr,
                                              opts),
                        &needed);
      } else {
        auto tokens = qiraa::NormalizeText(vdb_opts.Input());
        for (const auto& sentence : SplitSentences(tokens)) {
          auto seq = qiraa::TranscribeText(sentence, rules,
                                           lex ? &*lex : nullptr, opts);
          if (!seq.empty()) CollectNeeded(seq, &needed);
        }
      }
      auto report = qiraa::Coverage(inv, needed);
      for (const auto& m : report.missing_phonemes)
        std::cout << "missing phoneme\t" << m << '\n';
      for (const auto& m : report.missing_diphones)
        std::cout << "missing diphone\t" << m << '\n';
      return report.full() ? 0 : 1;
    }

    if (*eval) {
      auto corpus = qiraa::LoadCorpus(ReadFileOrThrow(eval_corpus));
      auto rules = eval_opts.Rules();
      auto lex = eval_opts.LexiconOrNone();
      auto report = qiraa::RunGolden(corpus, rules, lex ? &*lex : nullptr,
                                     eval_opts.Transcribe());
      std::cout << qiraa::FormatReport(report);
      return report.passed == report.tested ? 0 : 1;
    }
  } catch (const qiraa::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
