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

#include "qiraa/synth.h"

#include <algorithm>
#include <cstring>

#include "qiraa/error.h"
#include "qiraa/phonemes.h"

namespace qiraa {

namespace {

// Mathematical floor of num/den for den > 0.
int64_t FloorDiv(int64_t num, int64_t den) {
  int64_t q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

int16_t MixSample(int16_t a, int16_t b, int64_t i, int64_t w) {
  return static_cast<int16_t>(
      FloorDiv(static_cast<int64_t>(a) * (w - i) + static_cast<int64_t>(b) * i,
               w));
}

std::vector<const AudioUnit*> ResolveUnits(const SynthesisPlan& plan,
                                           const Inventory& inv,
                                           std::vector<AudioUnit>& storage) {
  if (plan.steps.empty()) throw Error(ErrorCode::kEmptyPlan, "empty plan");
  storage.reserve(plan.steps.size());
  std::vector<const AudioUnit*> units;
  units.reserve(plan.steps.size());
  for (const auto& key : plan.steps) {
    auto unit = inv.Get(key);
    if (!unit) throw Error(ErrorCode::kUnitNotFound, key);
    storage.push_back(std::move(*unit));
    units.push_back(&storage.back());
  }
  return units;
}

int64_t CrossfadeSamples(const std::vector<const AudioUnit*>& units,
                         const Inventory& inv, int crossfade_ms) {
  int64_t w = static_cast<int64_t>(crossfade_ms) * inv.sample_rate / 1000;
  if (w == 0) return 0;
  for (const auto* u : units) {
    if (static_cast<int64_t>(u->samples.size()) < w)
      throw Error(ErrorCode::kCrossfadeTooLong,
                  "crossfade " + std::to_string(w) + " samples > unit '" +
                      u->label + "' (" + std::to_string(u->samples.size()) +
                      " samples)");
  }
  return w;
}

}  // namespace

SynthesisPlan PlanSynthesis(const PhonemeSeq& seq, const Inventory& inv,
                            SynthMode mode) {
  SynthesisPlan plan;
  plan.mode = mode;

  if (mode == SynthMode::kPhonemeOnly) {
    for (const auto& label : seq) {
      if (!inv.Get(label)) throw Error(ErrorCode::kUnitNotFound, label);
      plan.steps.push_back(label);
    }
    return plan;
  }

  const DiphoneSeq pairs = ToDiphones(seq);
  bool prev_fell_back = false;
  for (const auto& pair : pairs) {
    std::string key = DiphoneKey(pair);
    if (inv.Get(key)) {
      plan.steps.push_back(key);
      prev_fell_back = false;
      continue;
    }
    ++plan.fallbacks_used;
    auto require_phoneme = [&](const std::string& label) {
      if (!inv.Get(label))
        throw Error(ErrorCode::kUnitNotFound,
                    "diphone '" + key + "' and phoneme '" + label + "'");
      plan.steps.push_back(label);
    };
    // The first phoneme was already emitted when the previous pair also
    // fell back.
    if (!prev_fell_back) require_phoneme(pair.first);
    require_phoneme(pair.second);
    prev_fell_back = true;
  }
  return plan;
}

WaveBuffer ConcatenateSerial(const SynthesisPlan& plan, const Inventory& inv,
                             int crossfade_ms) {
  std::vector<AudioUnit> storage;
  auto units = ResolveUnits(plan, inv, storage);
  const int64_t w = CrossfadeSamples(units, inv, crossfade_ms);

  WaveBuffer out;
  out.sample_rate = inv.sample_rate;
  out.samples = units[0]->samples;
  for (size_t j = 1; j < units.size(); ++j) {
    const auto& next = units[j]->samples;
    size_t base = out.samples.size() - static_cast<size_t>(w);
    for (int64_t i = 0; i < w; ++i)
      out.samples[base + static_cast<size_t>(i)] =
          MixSample(out.samples[base + static_cast<size_t>(i)],
                    next[static_cast<size_t>(i)], i, w);
    out.samples.insert(out.samples.end(), next.begin() + w, next.end());
  }
  return out;
}

WaveBuffer Concatenate(const SynthesisPlan& plan, const Inventory& inv,
                       int crossfade_ms) {
  std::vector<AudioUnit> storage;
  auto units = ResolveUnits(plan, inv, storage);
  const int64_t w = CrossfadeSamples(units, inv, crossfade_ms);
  const long n = static_cast<long>(units.size());

  // Unit j starts at the sum of previous lengths minus j overlaps.
  int64_t min_len = units[0]->samples.size();
  std::vector<int64_t> offset(units.size());
  int64_t acc = 0;
  for (long j = 0; j < n; ++j) {
    offset[j] = acc;
    acc += static_cast<int64_t>(units[j]->samples.size()) - w;
    min_len = std::min(min_len,
                       static_cast<int64_t>(units[j]->samples.size()));
  }
  const int64_t total = acc + w;

  // Adjacent joins only stay independent when every unit is at least two
  // overlaps long; the short-unit case cascades and must run serially.
  if (w > 0 && min_len < 2 * w) return ConcatenateSerial(plan, inv, crossfade_ms);

  WaveBuffer out;
  out.sample_rate = inv.sample_rate;
  out.samples.resize(static_cast<size_t>(total));
  int16_t* dst = out.samples.data();

#pragma omp parallel for schedule(static)
  for (long j = 0; j < n; ++j) {
    const auto& s = units[j]->samples;
    // Verbatim region: skip the first w samples (mixed by join j-1) except
    // for the first unit, and the last w samples (mixed by join j) except
    // for the last unit.
    int64_t from = (j == 0) ? 0 : w;
    int64_t to = static_cast<int64_t>(s.size()) - ((j + 1 < n) ? w : 0);
    if (to > from)
      std::memcpy(dst + offset[j] + from, s.data() + from,
                  static_cast<size_t>(to - from) * sizeof(int16_t));
  }

#pragma omp parallel for schedule(static)
  for (long j = 0; j < n - 1; ++j) {
    const auto& a = units[j]->samples;
    const auto& b = units[j + 1]->samples;
    int64_t join = offset[j + 1];
    for (int64_t i = 0; i < w; ++i)
      dst[join + i] = MixSample(a[a.size() - static_cast<size_t>(w - i)],
                                b[static_cast<size_t>(i)], i, w);
  }
  return out;
}

}  // namespace qiraa
