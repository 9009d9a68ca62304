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

#include "qiraa/inventory.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "qiraa/error.h"
#include "qiraa/phonemes.h"
#include "qiraa/wav.h"

namespace qiraa {

std::optional<AudioUnit> Inventory::Get(const std::string& key) const {
  if (IsBoundaryLabel(key)) {
    AudioUnit silence;
    silence.label = key;
    silence.kind = UnitKind::kPhoneme;
    silence.sample_rate = sample_rate;
    silence.samples.assign(
        static_cast<size_t>(static_cast<int64_t>(silence_ms) * sample_rate /
                            1000),
        0);
    return silence;
  }
  auto it = units.find(key);
  if (it == units.end()) return std::nullopt;
  return it->second;
}

void Inventory::Add(AudioUnit unit) {
  if (units.count(unit.label))
    throw Error(ErrorCode::kDuplicateLabel, unit.label);
  if (sample_rate == 0) sample_rate = unit.sample_rate;
  if (unit.sample_rate != sample_rate)
    throw Error(ErrorCode::kRateMismatch,
                unit.label + ": " + std::to_string(unit.sample_rate) +
                    " Hz vs " + std::to_string(sample_rate) + " Hz");
  units.emplace(unit.label, std::move(unit));
}

Inventory LoadManifest(const std::string& manifest_path, int silence_ms) {
  std::ifstream f(manifest_path);
  if (!f) throw Error(ErrorCode::kMissingFile, manifest_path);
  const auto base_dir = std::filesystem::path(manifest_path).parent_path();

  Inventory inv;
  inv.silence_ms = silence_ms;

  std::string line;
  int line_no = 0;
  while (std::getline(f, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;

    std::vector<std::string> fields;
    std::istringstream ls(line);
    std::string field;
    while (std::getline(ls, field, '\t')) fields.push_back(field);
    if (fields.size() != 3 && fields.size() != 5)
      throw Error(ErrorCode::kMalformedLine,
                  "expected 3 or 5 fields on line " + std::to_string(line_no),
                  line_no);

    AudioUnit unit;
    unit.label = fields[0];
    if (fields[1] == "phoneme")
      unit.kind = UnitKind::kPhoneme;
    else if (fields[1] == "diphone")
      unit.kind = UnitKind::kDiphone;
    else
      throw Error(ErrorCode::kMalformedLine,
                  "unknown kind '" + fields[1] + "' on line " +
                      std::to_string(line_no),
                  line_no);
    if (IsBoundaryLabel(unit.label))
      throw Error(ErrorCode::kDuplicateLabel,
                  "'" + unit.label + "' is generated silence (line " +
                      std::to_string(line_no) + ")",
                  line_no);

    WaveBuffer wav = ReadWav((base_dir / fields[2]).string());
    if (inv.sample_rate != 0 && wav.sample_rate != inv.sample_rate)
      throw Error(ErrorCode::kRateMismatch,
                  fields[2] + ": " + std::to_string(wav.sample_rate) +
                      " Hz vs " + std::to_string(inv.sample_rate) + " Hz");
    unit.sample_rate = wav.sample_rate;

    if (fields.size() == 5) {
      long start_ms = std::stol(fields[3]);
      long end_ms = std::stol(fields[4]);
      // Sample index = floor(ms * rate / 1000).
      int64_t start =
          static_cast<int64_t>(start_ms) * wav.sample_rate / 1000;
      int64_t end = static_cast<int64_t>(end_ms) * wav.sample_rate / 1000;
      if (start_ms < 0 || end_ms < start_ms ||
          end > static_cast<int64_t>(wav.samples.size()))
        throw Error(ErrorCode::kBadSliceBounds,
                    "line " + std::to_string(line_no) + ": [" +
                        std::to_string(start_ms) + ", " +
                        std::to_string(end_ms) + ") ms",
                    line_no);
      unit.samples.assign(wav.samples.begin() + start,
                          wav.samples.begin() + end);
    } else {
      unit.samples = std::move(wav.samples);
    }
    if (unit.samples.empty())
      throw Error(ErrorCode::kBadSliceBounds,
                  "empty unit '" + unit.label + "' on line " +
                      std::to_string(line_no),
                  line_no);
    inv.Add(std::move(unit));
  }
  return inv;
}

CoverageReport Coverage(const Inventory& inv,
                        const std::set<std::string>& needed) {
  CoverageReport report;
  for (const auto& key : needed) {
    if (IsBoundaryLabel(key) || inv.units.count(key)) continue;
    if (key.find('+') != std::string::npos)
      report.missing_diphones.push_back(key);
    else
      report.missing_phonemes.push_back(key);
  }
  return report;
}

}  // namespace qiraa
