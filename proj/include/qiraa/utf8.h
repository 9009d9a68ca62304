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

#ifndef QIRAA_UTF8_H_
#define QIRAA_UTF8_H_

#include <string>
#include <string_view>

namespace qiraa {
namespace utf8 {

// Decodes UTF-8 into codepoints. Throws Error(kInvalidEncoding) with the
// byte offset of the first bad sequence.
std::u32string Decode(std::string_view bytes);

std::string Encode(std::u32string_view codepoints);
std::string Encode(char32_t codepoint);

}  // namespace utf8
}  // namespace qiraa

#endif  // QIRAA_UTF8_H_
