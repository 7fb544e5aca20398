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

#include "mddm/baseline/eddm.hpp"

#include <cmath>

#include "mddm/errors.hpp"

namespace mddm::baseline {

Eddm::Eddm(const EddmConfig& config) : config_(config) {
  if (!(config.drift_ratio > 0.0 && config.drift_ratio <= config.warning_ratio &&
        config.warning_ratio <= 1.0)) {
    throw ParameterError("EDDM needs 0 < drift_ratio <= warning_ratio <= 1");
  }
}

void Eddm::reset() {
  n_ = 0;
  last_error_ = 0;
  errors_ = 0;
  mean_ = 0.0;
  m2_ = 0.0;
  max_m2s_ = 0.0;
}

Verdict Eddm::step(bool correct) {
  ++n_;
  if (correct) {
    return Verdict::NoChange;
  }

  // The first error's distance is measured from the last reset.
  const double distance = static_cast<double>(n_ - last_error_);
  last_error_ = n_;
  ++errors_;
  const double old_mean = mean_;
  mean_ += (distance - mean_) / static_cast<double>(errors_);
  m2_ += (distance - mean_) * (distance - old_mean);
  const double deviation = std::sqrt(m2_ / static_cast<double>(errors_));
  const double m2s = mean_ + 2.0 * deviation;

  if (m2s > max_m2s_) {
    max_m2s_ = m2s;
    return Verdict::NoChange;
  }
  if (errors_ < config_.min_errors) {
    return Verdict::NoChange;
  }
  const double ratio = m2s / max_m2s_;
  if (ratio < config_.drift_ratio) {
    reset();
    return Verdict::Drift;
  }
  if (ratio < config_.warning_ratio) {
    return Verdict::Warning;
  }
  return Verdict::NoChange;
}

}  // namespace mddm::baseline
