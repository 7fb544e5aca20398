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
#include <span>
#include <string>
#include <vector>

namespace mddm::eval {

/// Detection record of one run against known drift positions.
struct DriftScore {
  // One entry per scheduled drift; Delta for a missed drift.
  std::vector<std::size_t> delays;
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
  std::size_t alarm_count = 0;
  double accuracy = 0.0;

  /// Mean of `delays` (0 when there are no drifts).
  double mean_delay() const noexcept;
};

/// Scores alarms with the acceptable-delay rule. Drift d accepts alarms in
/// (d, d + accept_delay]; its first such alarm makes it a true positive with
/// delay alarm - d, later ones in the region are ignored. A drift without
/// one is a false negative with delay accept_delay. Every alarm outside all
/// regions is a false positive.
///
/// Throws ContractError unless both lists are strictly increasing, the
/// regions are disjoint and accept_delay > 0.
DriftScore score_run(std::span<const std::size_t> alarms, std::span<const std::size_t> drifts,
                     std::size_t accept_delay, double accuracy = 0.0);

struct MeanStd {
  double mean = 0.0;
  double std = 0.0;
};

/// Mean and sample (n - 1) standard deviation; std is 0 for a single value.
/// Throws ContractError on empty input.
MeanStd mean_std(std::span<const double> values);

struct AggregateRow {
  std::string stream;
  std::string detector;
  std::size_t runs = 0;
  MeanStd delay;
  MeanStd tp;
  MeanStd fp;
  MeanStd fn;
  MeanStd accuracy;
  MeanStd alarms;
};

/// Mean +- sample std of each metric over runs; a run's delay is the mean
/// of its per-drift delays. Throws ContractError on empty input.
AggregateRow aggregate(std::span<const DriftScore> scores);

}  // namespace mddm::eval
