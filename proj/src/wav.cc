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

#include "qiraa/wav.h"

#include <cstring>
#include <fstream>

#include "qiraa/error.h"

namespace qiraa {

namespace {

void PutU32(std::string& out, uint32_t v) {
  out.push_back(static_cast<char>(v & 0xFF));
  out.push_back(static_cast<char>((v >> 8) & 0xFF));
  out.push_back(static_cast<char>((v >> 16) & 0xFF));
  out.push_back(static_cast<char>((v >> 24) & 0xFF));
}

void PutU16(std::string& out, uint16_t v) {
  out.push_back(static_cast<char>(v & 0xFF));
  out.push_back(static_cast<char>((v >> 8) & 0xFF));
}

uint32_t GetU32(const unsigned char* p) {
  return static_cast<uint32_t>(p[0]) | (static_cast<uint32_t>(p[1]) << 8) |
         (static_cast<uint32_t>(p[2]) << 16) |
         (static_cast<uint32_t>(p[3]) << 24);
}

uint16_t GetU16(const unsigned char* p) {
  return static_cast<uint16_t>(p[0] | (p[1] << 8));
}

}  // namespace

void WriteWav(const WaveBuffer& buf, const std::string& path) {
  const uint32_t data_size = static_cast<uint32_t>(buf.samples.size() * 2);
  std::string out;
  out.reserve(44 + data_size);
  out += "RIFF";
  PutU32(out, 36 + data_size);
  out += "WAVEfmt ";
  PutU32(out, 16);
  PutU16(out, 1);  // PCM
  PutU16(out, 1);  // mono
  PutU32(out, static_cast<uint32_t>(buf.sample_rate));
  PutU32(out, static_cast<uint32_t>(buf.sample_rate) * 2);  // byte rate
  PutU16(out, 2);   // block align
  PutU16(out, 16);  // bits per sample
  out += "data";
  PutU32(out, data_size);
  for (int16_t s : buf.samples) {
    uint16_t u = static_cast<uint16_t>(s);
    out.push_back(static_cast<char>(u & 0xFF));
    out.push_back(static_cast<char>((u >> 8) & 0xFF));
  }

  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error(ErrorCode::kIoError, "cannot open " + path);
  f.write(out.data(), static_cast<std::streamsize>(out.size()));
  if (!f) throw Error(ErrorCode::kIoError, "short write to " + path);
}

WaveBuffer ReadWav(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::kMissingFile, path);
  std::string bytes((std::istreambuf_iterator<char>(f)),
                    std::istreambuf_iterator<char>());
  const unsigned char* p = reinterpret_cast<const unsigned char*>(bytes.data());
  if (bytes.size() < 12 || std::memcmp(p, "RIFF", 4) != 0 ||
      std::memcmp(p + 8, "WAVE", 4) != 0)
    throw Error(ErrorCode::kIoError, "not a RIFF/WAVE file: " + path);

  WaveBuffer buf;
  bool have_fmt = false;
  bool have_data = false;
  size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const unsigned char* hdr = p + pos;
    uint32_t chunk_size = GetU32(hdr + 4);
    size_t body = pos + 8;
    if (body + chunk_size > bytes.size())
      throw Error(ErrorCode::kIoError, "truncated chunk in " + path);
    if (std::memcmp(hdr, "fmt ", 4) == 0) {
      if (chunk_size < 16)
        throw Error(ErrorCode::kIoError, "short fmt chunk in " + path);
      uint16_t format = GetU16(p + body);
      uint16_t channels = GetU16(p + body + 2);
      uint32_t rate = GetU32(p + body + 4);
      uint16_t bits = GetU16(p + body + 14);
      if (format != 1 || bits != 16)
        throw Error(ErrorCode::kNotPcm16, path);
      if (channels != 1) throw Error(ErrorCode::kNotMono, path);
      buf.sample_rate = static_cast<int>(rate);
      have_fmt = true;
    } else if (std::memcmp(hdr, "data", 4) == 0) {
      buf.samples.resize(chunk_size / 2);
      for (size_t i = 0; i < buf.samples.size(); ++i)
        buf.samples[i] = static_cast<int16_t>(GetU16(p + body + 2 * i));
      have_data = true;
    }
    pos = body + chunk_size + (chunk_size & 1);  // chunks are word-aligned
  }
  if (!have_fmt || !have_data)
    throw Error(ErrorCode::kIoError, "missing fmt or data chunk in " + path);
  return buf;
}

}  // namespace qiraa
