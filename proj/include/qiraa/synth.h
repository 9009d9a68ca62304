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

#ifndef QIRAA_SYNTH_H_
#define QIRAA_SYNTH_H_

#include <string>
#include <vector>

#include "qiraa/g2p.h"
#include "qiraa/inventory.h"
#include "qiraa/wav.h"

namespace qiraa {

enum class SynthMode { kDiphoneFirst, kPhonemeOnly };

struct SynthesisPlan {
  std::vector<std::string> steps;  // unit keys, resolvable in the inventory
  SynthMode mode = SynthMode::kDiphoneFirst;
  int fallbacks_used = 0;
};

// DiphoneFirst: one step per adjacent pair, using the diphone unit when
// present. A missing diphone degrades to the pair's phoneme units; a
// phoneme shared with the immediately preceding fallback pair is emitted
// only once. PhonemeOnly: one step per label.
SynthesisPlan PlanSynthesis(const PhonemeSeq& seq, const Inventory& inv,
                            SynthMode mode);

// Splices the planned units. With crossfade 0 the output is the exact
// back-to-back concatenation. With w = floor(crossfade_ms * rate / 1000) > 0,
// each of the n-1 joins overlaps w samples linearly: overlap sample i is
// floor(a*(w-i)/w + b*i/w) computed in exact integer arithmetic
// (mathematical floor), so output length = sum of unit lengths - (n-1)*w.
//
// The hot path is OpenMP-parallel over units and joins; ConcatenateSerial
// is the reference implementation kept for testing and benchmarking. Both
// produce bit-identical buffers.
WaveBuffer Concatenate(const SynthesisPlan& plan, const Inventory& inv,
                       int crossfade_ms = 0);
WaveBuffer ConcatenateSerial(const SynthesisPlan& plan, const Inventory& inv,
                             int crossfade_ms = 0);

}  // namespace qiraa

#endif  // QIRAA_SYNTH_H_
