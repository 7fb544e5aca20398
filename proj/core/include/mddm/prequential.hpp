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
#include <string>
#include <string_view>
#include <vector>

#include "mddm/detector.hpp"
#include "mddm/instance.hpp"
#include "mddm/naive_bayes.hpp"

namespace mddm::learn {

/// What the runner does with the classifier when an alarm is raised.
struct AdaptationPolicy {
  enum class Kind : std::uint8_t {
    ResetOnDrift,  // discard the model on every Drift verdict
    Ignore,        // record alarms, never touch the model
    Blind,         // no detector; discard the model every `period` instances
  };

  Kind kind = Kind::ResetOnDrift;
  std::size_t period = 100;

  /// "reset", "none", or "blind:<period>" / "blind" (period 100).
  static AdaptationPolicy parse(std::string_view text);
  std::string describe() const;
};

struct RunRecord {
  std::vector<std::size_t> alarms;
  std::size_t warnings = 0;
  std::size_t processed = 0;
  std::size_t correct = 0;
  double accuracy = 0.0;
  // 1 = correct prediction; filled only when requested.
  std::vector<std::uint8_t> bits;
};

/// Accuracy over every processed instance; the untrained first prediction
/// counts as an error.
double prequential_accuracy(std::size_t correct, std::size_t processed) noexcept;

/// Test-then-train loop. For each instance: predict, feed the outcome to the
/// detector, record and act on a Drift verdict per `policy`, then train.
/// `detector` may be null (no-detection and blind benchmarks).
RunRecord prequential_run(stream::InstanceSource& source, NaiveBayes& model, DriftDetector* detector,
                          const AdaptationPolicy& policy = {}, bool keep_bits = false);

}  // namespace mddm::learn
