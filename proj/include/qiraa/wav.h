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

#ifndef QIRAA_WAV_H_
#define QIRAA_WAV_H_

#include <cstdint>
#include <string>
#include <vector>

namespace qiraa {

struct WaveBuffer {
  std::vector<int16_t> samples;
  int sample_rate = 0;

  bool operator==(const WaveBuffer&) const = default;
};

// RIFF/WAVE, PCM format code 1, mono, 16-bit little-endian. Read-back of a
// written file yields bit-identical samples.
void WriteWav(const WaveBuffer& buf, const std::string& path);

// Throws kMissingFile, kNotPcm16, kNotMono or kIoError.
WaveBuffer ReadWav(const std::string& path);

}  // namespace qiraa

#endif  // QIRAA_WAV_H_
