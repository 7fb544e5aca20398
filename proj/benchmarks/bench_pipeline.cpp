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

#include "mddm/detector_factory.hpp"
#include "mddm/generators.hpp"
#include "mddm/naive_bayes.hpp"
#include "mddm/prequential.hpp"

namespace {

using mddm::stream::StreamFamily;

void BM_Generate(benchmark::State& state, StreamFamily family) {
  auto spec = mddm::stream::default_spec(family);
  mddm::stream::SyntheticStream src(spec);
  for (auto _ : state) {
    auto inst = src.next();
    if (!inst) {
      state.PauseTiming();
      src = mddm::stream::SyntheticStream(spec);
      state.ResumeTiming();
      continue;
    }
    benchmark::DoNotOptimize(inst->label);
  }
  state.SetItemsProcessed(state.iterations());
}

BENCHMARK_CAPTURE(BM_Generate, sine1, StreamFamily::Sine1);
BENCHMARK_CAPTURE(BM_Generate, mixed, StreamFamily::Mixed);
BENCHMARK_CAPTURE(BM_Generate, circles, StreamFamily::Circles);
BENCHMARK_CAPTURE(BM_Generate, led, StreamFamily::Led);

void BM_NaiveBayesTestThenTrain(benchmark::State& state, StreamFamily family) {
  auto spec = mddm::stream::default_spec(family);
  spec.length = 20000;
  const auto data = mddm::stream::generate_stream(spec);
  mddm::learn::NaiveBayes nb(mddm::stream::schema_for(family));
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& x = data[i];
    if (nb.trained()) benchmark::DoNotOptimize(nb.predict(x.attributes));
    nb.train(x);
    if (++i == data.size()) i = 0;
  }
  state.SetItemsProcessed(state.iterations());
}

BENCHMARK_CAPTURE(BM_NaiveBayesTestThenTrain, sine1, StreamFamily::Sine1);
BENCHMARK_CAPTURE(BM_NaiveBayesTestThenTrain, led, StreamFamily::Led);

void BM_PrequentialRun(benchmark::State& state) {
  auto spec = mddm::stream::default_spec(StreamFamily::Sine1);
  spec.length = static_cast<std::size_t>(state.range(0));
  spec.schedule.drift_positions = {spec.length / 2};
  for (auto _ : state) {
    mddm::stream::SyntheticStream src(spec);
    mddm::learn::NaiveBayes nb(src.schema());
    auto det = mddm::make_detector(mddm::DetectorSpec{});
    benchmark::DoNotOptimize(mddm::learn::prequential_run(src, nb, det.get()).accuracy);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

BENCHMARK(BM_PrequentialRun)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

}  // namespace
