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

#include "qiraa/utf8.h"

#include "qiraa/error.h"

namespace qiraa {
namespace utf8 {

namespace {

bool IsContinuation(unsigned char b) { return (b & 0xC0) == 0x80; }

}  // namespace

std::u32string Decode(std::string_view bytes) {
  std::u32string out;
  out.reserve(bytes.size());
  size_t i = 0;
  while (i < bytes.size()) {
    unsigned char b0 = static_cast<unsigned char>(bytes[i]);
    char32_t cp = 0;
    size_t len = 0;
    if (b0 < 0x80) {
      cp = b0;
      len = 1;
    } else if ((b0 & 0xE0) == 0xC0) {
      cp = b0 & 0x1F;
      len = 2;
    } else if ((b0 & 0xF0) == 0xE0) {
      cp = b0 & 0x0F;
      len = 3;
    } else if ((b0 & 0xF8) == 0xF0) {
      cp = b0 & 0x07;
      len = 4;
    } else {
      throw Error(ErrorCode::kInvalidEncoding,
                  "bad lead byte at offset " + std::to_string(i),
                  static_cast<long>(i));
    }
    if (i + len > bytes.size()) {
      throw Error(ErrorCode::kInvalidEncoding,
                  "truncated sequence at offset " + std::to_string(i),
                  static_cast<long>(i));
    }
    for (size_t k = 1; k < len; ++k) {
      unsigned char bk = static_cast<unsigned char>(bytes[i + k]);
      if (!IsContinuation(bk)) {
        throw Error(ErrorCode::kInvalidEncoding,
                    "bad continuation byte at offset " + std::to_string(i + k),
                    static_cast<long>(i + k));
      }
      cp = (cp << 6) | (bk & 0x3F);
    }
    // Reject overlong encodings and surrogate range.
    static const char32_t kMin[5] = {0, 0, 0x80, 0x800, 0x10000};
    if (len > 1 && cp < kMin[len]) {
      throw Error(ErrorCode::kInvalidEncoding,
                  "overlong sequence at offset " + std::to_string(i),
                  static_cast<long>(i));
    }
    if ((cp >= 0xD800 && cp <= 0xDFFF) || cp > 0x10FFFF) {
      throw Error(ErrorCode::kInvalidEncoding,
                  "invalid codepoint at offset " + std::to_string(i),
                  static_cast<long>(i));
    }
    out.push_back(cp);
    i += len;
  }
  return out;
}

std::string Encode(char32_t cp) {
  std::string out;
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
  return out;
}

std::string Encode(std::u32string_view codepoints) {
  std::string out;
  out.reserve(codepoints.size() * 2);
  for (char32_t cp : codepoints) out += Encode(cp);
  return out;
}

}  // namespace utf8
}  // namespace qiraa
