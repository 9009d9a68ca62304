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

// Benchmark: OpenMP concatenation kernel vs the serial reference over a
// synthetic inventory. Usage: bench_concat [units] [unit_samples] [crossfade_ms]

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>

#include "qiraa/inventory.h"
#include "qiraa/synth.h"

int main(int argc, char** argv) {
  const int n_units = argc > 1 ? std::atoi(argv[1]) : 2000;
  const int unit_samples = argc > 2 ? std::atoi(argv[2]) : 8000;
  const int crossfade_ms = argc > 3 ? std::atoi(argv[3]) : 20;
  const int rate = 16000;

  qiraa::Inventory inv;
  inv.sample_rate = rate;
  std::mt19937 rng(42);
  std::uniform_int_distribution<int> amp(-20000, 20000);

  qiraa::SynthesisPlan plan;
  plan.mode = qiraa::SynthMode::kPhonemeOnly;
  for (int i = 0; i < n_units; ++i) {
    qiraa::AudioUnit u;
    u.label = "u" + std::to_string(i);
    u.sample_rate = rate;
    u.samples.resize(unit_samples);
    for (auto& s : u.samples) s = static_cast<int16_t>(amp(rng));
    inv.units.emplace(u.label, std::move(u));
    plan.steps.push_back("u" + std::to_string(i));
  }

  auto time_it = [&](auto&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    auto out = fn();
    auto t1 = std::chrono::steady_clock::now();
    return std::make_pair(
        std::chrono::duration<double, std::milli>(t1 - t0).count(),
        std::move(out));
  };

  auto [serial_ms, serial] =
      time_it([&] { return qiraa::ConcatenateSerial(plan, inv, crossfade_ms); });
  auto [parallel_ms, parallel] =
      time_it([&] { return qiraa::Concatenate(plan, inv, crossfade_ms); });

  std::cout << "units=" << n_units << " unit_samples=" << unit_samples
            << " crossfade_ms=" << crossfade_ms << '\n'
            << "serial:   " << serial_ms << " ms\n"
            << "parallel: " << parallel_ms << " ms\n"
            << "speedup:  " << serial_ms / parallel_ms << "x\n"
            << "identical: " << (serial == parallel ? "yes" : "NO") << '\n';
  return serial == parallel ? 0 : 1;
}
