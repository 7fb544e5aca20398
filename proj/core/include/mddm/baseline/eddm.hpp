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

#include "mddm/detector.hpp"

namespace mddm::baseline {

struct EddmConfig {
  double warning_ratio = 0.95;  // alpha
  double drift_ratio = 0.90;    // beta
  std::size_t min_errors = 30;

  bool operator==(const EddmConfig&) const = default;
};

/// Early Drift Detection Method. Monitors the distance (in instances)
/// between consecutive errors; its mean p' and population deviation s' are
/// compared with the largest p' + 2 s' seen since the last reset.
class Eddm final : public DriftDetector {
 public:
  explicit Eddm(const EddmConfig& config = {});

  Verdict step(bool correct) override;
  void reset() override;
  std::string name() const override { return "EDDM"; }

  double mean_distance() const noexcept { return mean_; }
  double max_statistic() const noexcept { return max_m2s_; }
  std::size_t errors() const noexcept { return errors_; }

  bool operator==(const Eddm& o) const {
    return config_ == o.config_ && n_ == o.n_ && last_error_ == o.last_error_ &&
           errors_ == o.errors_ && mean_ == o.mean_ && m2_ == o.m2_ && max_m2s_ == o.max_m2s_;
  }

 private:
  EddmConfig config_;
  std::size_t n_ = 0;
  std::size_t last_error_ = 0;
  std::size_t errors_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
  double max_m2s_ = 0.0;
};

}  // namespace mddm::baseline
