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

#include "mddm/experiment.hpp"

#include <atomic>
#include <exception>
#include <fstream>
#include <functional>
#include <memory>
#include <mutex>
#include <thread>

#include "mddm/csv_stream.hpp"
#include "mddm/errors.hpp"
#include "mddm/naive_bayes.hpp"

namespace mddm::experiment {

namespace {

using stream::StreamFamily;

// Calls fn(i) for i in [0, n) on up to `jobs` threads. The first exception
// is rethrown after all workers finish.
void parallel_for(std::size_t n, std::size_t jobs, const std::function<void(std::size_t)>& fn) {
  jobs = std::max<std::size_t>(1, std::min(jobs, n));
  if (jobs == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> workers;
  for (std::size_t w = 0; w < jobs; ++w) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : workers) t.join();
  if (failure) std::rethrow_exception(failure);
}

std::unique_ptr<stream::InstanceSource> open_source(const stream::StreamSpec& spec) {
  if (spec.family == StreamFamily::CsvFile) {
    return std::make_unique<stream::CsvStream>(spec.csv_path);
  }
  return std::make_unique<stream::SyntheticStream>(spec);
}

RunResult run_once(const ExperimentConfig& config, std::size_t run, std::size_t accept_delay, bool scored) {
  RunResult result;
  result.run = run;
  result.seed = config.base_seed + run;

  stream::StreamSpec spec = config.stream;
  spec.seed = result.seed;
  auto source = open_source(spec);
  learn::NaiveBayes model(source->schema());
  DetectorPtr detector;
  if (config.policy.kind != learn::AdaptationPolicy::Kind::Blind) {
    detector = make_detector(config.detector, default_window(spec.family));
  }

  const learn::RunRecord record = learn::prequential_run(*source, model, detector.get(), config.policy);
  if (scored) {
    result.score = eval::score_run(record.alarms, spec.schedule.drift_positions, accept_delay, record.accuracy);
  } else {
    result.score.alarm_count = record.alarms.size();
    result.score.accuracy = record.accuracy;
  }
  result.alarms = record.alarms;
  result.warnings = record.warnings;
  return result;
}

}  // namespace

std::size_t default_window(StreamFamily family) noexcept {
  switch (family) {
    case StreamFamily::Circles:
    case StreamFamily::Led:
      return 100;
    default:
      return 25;
  }
}

std::size_t default_accept_delay(StreamFamily family) noexcept {
  switch (family) {
    case StreamFamily::Circles:
    case StreamFamily::Led:
      return 1000;
    default:
      return 250;
  }
}

std::string stream_label(const stream::StreamSpec& spec) {
  if (spec.family == StreamFamily::CsvFile) {
    return std::filesystem::path(spec.csv_path).stem().string();
  }
  return std::string(stream::to_string(spec.family));
}

CellResult run_experiment(const ExperimentConfig& config, std::size_t jobs) {
  if (config.runs == 0) {
    throw ConfigError("runs must be at least 1");
  }
  stream::validate(config.stream);
  // Fail fast on a bad detector name or parameter.
  if (config.policy.kind != learn::AdaptationPolicy::Kind::Blind) {
    (void)make_detector(config.detector, default_window(config.stream.family));
  }

  CellResult cell;
  cell.stream = stream_label(config.stream);
  cell.detector = config.policy.kind == learn::AdaptationPolicy::Kind::Blind
                      ? "Blind[" + config.policy.describe() + "]"
                      : display_name(config.detector);
  cell.scored = config.stream.family != StreamFamily::CsvFile;
  const std::size_t accept_delay = config.accept_delay.value_or(default_accept_delay(config.stream.family));

  cell.runs.resize(config.runs);
  parallel_for(config.runs, jobs, [&](std::size_t i) { cell.runs[i] = run_once(config, i, accept_delay, cell.scored); });

  std::vector<eval::DriftScore> scores;
  scores.reserve(cell.runs.size());
  for (const auto& r : cell.runs) scores.push_back(r.score);
  cell.aggregate = eval::aggregate(scores);
  cell.aggregate.stream = cell.stream;
  cell.aggregate.detector = cell.detector;
  return cell;
}

std::vector<CellResult> run_matrix(std::span<const ExperimentConfig> cells, std::size_t jobs) {
  std::vector<CellResult> results(cells.size());
  parallel_for(cells.size(), jobs, [&](std::size_t i) {
    try {
      results[i] = run_experiment(cells[i]);
    } catch (const std::exception& e) {
      CellResult failed;
      failed.stream = stream_label(cells[i].stream);
      failed.detector = cells[i].detector.name;
      try {
        failed.detector = display_name(cells[i].detector);
      } catch (const std::exception&) {
      }
      failed.error = e.what();
      results[i] = std::move(failed);
    }
  });
  return results;
}

void dump_stream(const stream::StreamSpec& spec, const std::filesystem::path& path) {
  if (spec.family == StreamFamily::CsvFile) {
    throw ConfigError("only synthetic streams can be dumped");
  }
  const auto instances = stream::generate_stream(spec);
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw DataError("cannot open '" + path.string() + "' for writing");
  }
  stream::write_csv(out, stream::schema_for(spec.family), instances);
  out.flush();
  if (!out) {
    throw DataError("failed writing '" + path.string() + "'");
  }
}

}  // namespace mddm::experiment
