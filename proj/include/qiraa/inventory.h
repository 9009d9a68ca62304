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

#ifndef QIRAA_INVENTORY_H_
#define QIRAA_INVENTORY_H_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace qiraa {

enum class UnitKind { kPhoneme, kDiphone };

struct AudioUnit {
  std::string label;  // phoneme label, or diphone key "x+y"
  UnitKind kind = UnitKind::kPhoneme;
  std::vector<int16_t> samples;
  int sample_rate = 0;
};

// The sound database: pre-segmented units keyed by label. "#" and "_" are
// synthesized silence of silence_ms, never loaded from disk.
struct Inventory {
  std::map<std::string, AudioUnit> units;
  int sample_rate = 0;
  int silence_ms = 100;

  // Exact-key lookup; returns generated silence for "#" and "_" with
  // sample count = silence_ms * sample_rate / 1000 (integer division).
  std::optional<AudioUnit> Get(const std::string& key) const;

  void Add(AudioUnit unit);  // throws kDuplicateLabel / kRateMismatch
};

// Manifest: UTF-8 TSV rows `label  kind  wav_path  [start_ms  end_ms]`,
// kind in {phoneme, diphone}; '#' lines are comments; WAV paths are
// relative to the manifest. Slices use floor(ms * rate / 1000) sample
// indexing, [start, end). The first file's rate becomes canonical.
Inventory LoadManifest(const std::string& manifest_path, int silence_ms = 100);

struct CoverageReport {
  std::vector<std::string> missing_phonemes;
  std::vector<std::string> missing_diphones;

  bool full() const {
    return missing_phonemes.empty() && missing_diphones.empty();
  }
};

CoverageReport Coverage(const Inventory& inv,
                        const std::set<std::string>& needed);

}  // namespace qiraa

#endif  // QIRAA_INVENTORY_H_
