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

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>

#include "doctest.h"
#include "qiraa/error.h"
#include "qiraa/wav.h"

using namespace qiraa;
namespace fs = std::filesystem;

namespace {

AudioUnit MakeUnit(const std::string& label, std::vector<int16_t> samples,
                   int rate) {
  AudioUnit u;
  u.label = label;
  u.kind = label.find('+') == std::string::npos ? UnitKind::kPhoneme
                                                : UnitKind::kDiphone;
  u.samples = std::move(samples);
  u.sample_rate = rate;
  return u;
}

Inventory FullInventory(int rate = 8000) {
  Inventory inv;
  inv.sample_rate = rate;
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> sample(-3000, 3000);
  for (const char* label : {"k", "a", "#+k", "k+a", "a+#", "a+k"}) {
    std::vector<int16_t> s(64);
    for (auto& v : s) v = static_cast<int16_t>(sample(rng));
    inv.Add(MakeUnit(label, std::move(s), rate));
  }
  return inv;
}

fs::path TempWav(const std::string& name) {
  return fs::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("diphone-first plan with full coverage") {
  auto inv = FullInventory();
  auto plan = PlanSynthesis({"#", "k", "a", "#"}, inv, SynthMode::kDiphoneFirst);
  CHECK(plan.steps == std::vector<std::string>{"#+k", "k+a", "a+#"});
  CHECK(plan.fallbacks_used == 0);
}

TEST_CASE("phoneme-only plan is one step per label") {
  auto inv = FullInventory();
  auto plan = PlanSynthesis({"#", "k", "a", "#"}, inv, SynthMode::kPhonemeOnly);
  CHECK(plan.steps == std::vector<std::string>{"#", "k", "a", "#"});
  CHECK(plan.fallbacks_used == 0);
}

TEST_CASE("missing diphone falls back to its phonemes") {
  auto inv = FullInventory();
  inv.units.erase("k+a");
  auto plan = PlanSynthesis({"#", "k", "a", "#"}, inv, SynthMode::kDiphoneFirst);
  CHECK(plan.steps == std::vector<std::string>{"#+k", "k", "a", "a+#"});
  CHECK(plan.fallbacks_used == 1);
}

TEST_CASE("adjacent fallbacks emit the shared phoneme once") {
  auto inv = FullInventory();
  inv.units.erase("k+a");
  inv.units.erase("a+k");
  auto plan =
      PlanSynthesis({"#", "k", "a", "k", "a", "#"}, inv, SynthMode::kDiphoneFirst);
  CHECK(plan.steps == std::vector<std::string>{"#+k", "k", "a", "k", "a", "a+#"});
  CHECK(plan.fallbacks_used == 3);
}

TEST_CASE("plan names both missing labels") {
  auto inv = FullInventory();
  inv.units.erase("k+a");
  inv.units.erase("k");
  try {
    PlanSynthesis({"#", "k", "a", "#"}, inv, SynthMode::kDiphoneFirst);
    FAIL("expected UnitNotFound");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kUnitNotFound);
    CHECK(std::string(e.what()).find("k+a") != std::string::npos);
  }
}

TEST_CASE("zero crossfade is an exact splice") {
  Inventory inv;
  inv.sample_rate = 1000;
  std::vector<int16_t> a(100), b(250);
  for (size_t i = 0; i < a.size(); ++i) a[i] = static_cast<int16_t>(i + 1);
  for (size_t i = 0; i < b.size(); ++i) b[i] = static_cast<int16_t>(-(int)i - 1);
  inv.Add(MakeUnit("a", a, 1000));
  inv.Add(MakeUnit("b", b, 1000));

  SynthesisPlan plan;
  plan.steps = {"a", "b"};
  auto out = Concatenate(plan, inv, 0);
  REQUIRE(out.samples.size() == 350);
  std::vector<int16_t> expected = a;
  expected.insert(expected.end(), b.begin(), b.end());
  CHECK(out.samples == expected);
  CHECK(ConcatenateSerial(plan, inv, 0) == out);
}

TEST_CASE("ten-sample crossfade matches the overlap-add definition") {
  Inventory inv;
  inv.sample_rate = 1000;  // 10 ms -> w = 10 samples
  std::vector<int16_t> a(100), b(250);
  for (size_t i = 0; i < a.size(); ++i) a[i] = static_cast<int16_t>(3 * i - 50);
  for (size_t i = 0; i < b.size(); ++i) b[i] = static_cast<int16_t>(200 - 2 * i);
  inv.Add(MakeUnit("a", a, 1000));
  inv.Add(MakeUnit("b", b, 1000));

  SynthesisPlan plan;
  plan.steps = {"a", "b"};
  auto out = Concatenate(plan, inv, 10);
  REQUIRE(out.samples.size() == 340);

  const int64_t w = 10;
  for (size_t i = 0; i < 90; ++i) CHECK(out.samples[i] == a[i]);
  for (int64_t i = 0; i < w; ++i) {
    // floor(a*(1-t) + b*t) with t = i/w, in exact integer arithmetic.
    int64_t va = a[90 + static_cast<size_t>(i)];
    int64_t vb = b[static_cast<size_t>(i)];
    int64_t num = va * (w - i) + vb * i;
    int64_t mixed = num / w - ((num % w != 0 && num < 0) ? 1 : 0);
    CHECK(out.samples[90 + static_cast<size_t>(i)] == mixed);
  }
  for (size_t i = 0; i < 240; ++i)
    CHECK(out.samples[100 + i] == b[10 + i]);
  CHECK(ConcatenateSerial(plan, inv, 10) == out);
}

TEST_CASE("empty plan and too-long crossfade are errors") {
  auto inv = FullInventory();
  SynthesisPlan empty;
  CHECK_THROWS_AS(Concatenate(empty, inv, 0), Error);
  CHECK_THROWS_AS(ConcatenateSerial(empty, inv, 0), Error);

  SynthesisPlan plan;
  plan.steps = {"k", "a"};
  // Units are 64 samples; 10 ms @8000 Hz = 80 samples of overlap.
  try {
    Concatenate(plan, inv, 10);
    FAIL("expected CrossfadeTooLong");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kCrossfadeTooLong);
  }
}

TEST_CASE("plan with unresolvable key fails at concatenation") {
  auto inv = FullInventory();
  SynthesisPlan plan;
  plan.steps = {"k", "zz"};
  CHECK_THROWS_AS(Concatenate(plan, inv, 0), Error);
}

TEST_CASE("parallel and serial concatenation are bit-identical") {
  std::mt19937 rng(42);
  std::uniform_int_distribution<int> n_units(1, 12);
  std::uniform_int_distribution<int> length(5, 300);
  std::uniform_int_distribution<int> sample(-32768, 32767);
  std::uniform_int_distribution<int> ms(0, 4);

  for (int trial = 0; trial < 50; ++trial) {
    Inventory inv;
    inv.sample_rate = 8000;  // 1 ms = 8 samples
    SynthesisPlan plan;
    int n = n_units(rng);
    for (int j = 0; j < n; ++j) {
      std::string label = "u" + std::to_string(j);
      std::vector<int16_t> s(static_cast<size_t>(length(rng)));
      for (auto& v : s) v = static_cast<int16_t>(sample(rng));
      inv.Add(MakeUnit(label, std::move(s), 8000));
      plan.steps.push_back(label);
    }
    int crossfade = ms(rng);
    int64_t w = static_cast<int64_t>(crossfade) * 8000 / 1000;
    int64_t shortest = 1 << 30;
    for (const auto& [_, u] : inv.units)
      shortest = std::min<int64_t>(shortest, u.samples.size());
    if (w > shortest) crossfade = 0;
    CHECK(Concatenate(plan, inv, crossfade) ==
          ConcatenateSerial(plan, inv, crossfade));
  }
}

TEST_CASE("wav: zero samples writes a 44-byte header-only file") {
  auto path = TempWav("qiraa_empty.wav");
  WriteWav({{}, 8000}, path.string());
  CHECK(fs::file_size(path) == 44);
  auto back = ReadWav(path.string());
  CHECK(back.samples.empty());
  CHECK(back.sample_rate == 8000);
  fs::remove(path);
}

TEST_CASE("wav: one sample at 8000 Hz is a 46-byte file") {
  auto path = TempWav("qiraa_one.wav");
  WriteWav({{0}, 8000}, path.string());
  CHECK(fs::file_size(path) == 46);

  std::ifstream f(path, std::ios::binary);
  std::vector<char> bytes((std::istreambuf_iterator<char>(f)),
                          std::istreambuf_iterator<char>());
  REQUIRE(bytes.size() == 46);
  // data chunk size field = 2 bytes (one int16 sample).
  uint32_t data_size = static_cast<uint8_t>(bytes[40]) |
                       (static_cast<uint8_t>(bytes[41]) << 8) |
                       (static_cast<uint8_t>(bytes[42]) << 16) |
                       (static_cast<uint8_t>(bytes[43]) << 24);
  CHECK(data_size == 2);
  fs::remove(path);
}

TEST_CASE("wav round-trip is bit-identical") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> length(0, 500);
  std::uniform_int_distribution<int> sample(-32768, 32767);
  auto path = TempWav("qiraa_rt.wav");
  for (int trial = 0; trial < 20; ++trial) {
    WaveBuffer buf;
    buf.sample_rate = (trial % 2) ? 16000 : 8000;
    buf.samples.resize(static_cast<size_t>(length(rng)));
    for (auto& v : buf.samples) v = static_cast<int16_t>(sample(rng));
    WriteWav(buf, path.string());
    CHECK(ReadWav(path.string()) == buf);
  }
  fs::remove(path);
}

TEST_CASE("wav errors") {
  CHECK_THROWS_AS(ReadWav("/no/such/file.wav"), Error);
  auto path = TempWav("qiraa_bad.wav");
  std::ofstream(path, std::ios::binary) << "not a riff file at all......";
  CHECK_THROWS_AS(ReadWav(path.string()), Error);
  fs::remove(path);
}
