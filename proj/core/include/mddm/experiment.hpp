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

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mddm/detector_factory.hpp"
#include "mddm/generators.hpp"
#include "mddm/prequential.hpp"
#include "mddm/scoring.hpp"

namespace mddm::experiment {

/// One (stream, detector) cell run R times.
struct ExperimentConfig {
  stream::StreamSpec stream = stream::default_spec(stream::StreamFamily::Sine1);
  DetectorSpec detector;
  std::size_t runs = 100;
  std::uint64_t base_seed = 1;
  // Defaults per family when unset (250 abrupt, 1000 gradual).
  std::optional<std::size_t> accept_delay;
  learn::AdaptationPolicy policy;
};

/// Window size of the windowed detectors: 25 for Sine1, Mixed and CSV
/// streams, 100 for Circles and LED.
std::size_t default_window(stream::StreamFamily family) noexcept;

/// Acceptable delay: 250 for Sine1 and Mixed, 1000 for Circles and LED.
std::size_t default_accept_delay(stream::StreamFamily family) noexcept;

/// Display name of the stream: the family, or the CSV file stem.
std::string stream_label(const stream::StreamSpec& spec);

struct RunResult {
  std::size_t run = 0;
  std::uint64_t seed = 0;
  eval::DriftScore score;  // delays/TP/FP/FN only meaningful when scored
  std::vector<std::size_t> alarms;
  std::size_t warnings = 0;
};

struct CellResult {
  std::string stream;
  std::string detector;
  // False for CSV streams, whose drift positions are unknown.
  bool scored = true;
  std::vector<RunResult> runs;
  eval::AggregateRow aggregate;
  std::string error;

  bool ok() const noexcept { return error.empty(); }
};

/// Runs config.runs independent prequential runs (seed base_seed + i) and
/// aggregates them. `jobs` > 1 spreads runs over worker threads; results
/// do not depend on it. Throws on configuration or data errors.
CellResult run_experiment(const ExperimentConfig& config, std::size_t jobs = 1);

/// Runs every cell; a failing cell records its error and the others still
/// complete. Results keep the input order.
std::vector<CellResult> run_matrix(std::span<const ExperimentConfig> cells, std::size_t jobs = 1);

/// Writes the synthetic stream `spec` (attributes..., label) to `path`.
/// Throws DataError if the file cannot be written.
void dump_stream(const stream::StreamSpec& spec, const std::filesystem::path& path);

}  // namespace mddm::experiment
