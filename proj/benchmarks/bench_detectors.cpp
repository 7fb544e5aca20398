// Copyright 2026 The MDDM Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "mddm/detector_factory.hpp"

namespace {

std::vector<bool> noisy_bits(std::size_t n) {
  std::mt19937_64 gen(42);
  std::bernoulli_distribution correct(0.85);
  std::vector<bool> bits(n);
  for (std::size_t i = 0; i < n; ++i) bits[i] = correct(gen);
  return bits;
}

void BM_DetectorStep(benchmark::State& state, const char* name, std::size_t window) {
  const auto bits = noisy_bits(1 << 16);
  mddm::DetectorSpec spec;
  spec.name = name;
  spec.window_size = window;
  auto det = mddm::make_detector(spec);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(det->step(bits[i]));
    i = (i + 1) & (bits.size() - 1);
  }
  state.SetItemsProcessed(state.iterations());
}

BENCHMARK_CAPTURE(BM_DetectorStep, mddm_a_25, "mddm-a", 25);
BENCHMARK_CAPTURE(BM_DetectorStep, mddm_a_100, "mddm-a", 100);
BENCHMARK_CAPTURE(BM_DetectorStep, mddm_g_25, "mddm-g", 25);
BENCHMARK_CAPTURE(BM_DetectorStep, mddm_e_25, "mddm-e", 25);
BENCHMARK_CAPTURE(BM_DetectorStep, fhddm_25, "fhddm", 25);
BENCHMARK_CAPTURE(BM_DetectorStep, cusum, "cusum", 25);
BENCHMARK_CAPTURE(BM_DetectorStep, page_hinkley, "page-hinkley", 25);
BENCHMARK_CAPTURE(BM_DetectorStep, ddm, "ddm", 25);
BENCHMARK_CAPTURE(BM_DetectorStep, eddm, "eddm", 25);
BENCHMARK_CAPTURE(BM_DetectorStep, rddm, "rddm", 25);
BENCHMARK_CAPTURE(BM_DetectorStep, adwin, "adwin", 25);

}  // namespace
