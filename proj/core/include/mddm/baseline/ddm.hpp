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
#include <limits>

#include "mddm/detector.hpp"

namespace mddm::baseline {

struct DdmConfig {
  std::size_t min_instances = 30;
  double warning_level = 2.0;
  double drift_level = 3.0;

  bool operator==(const DdmConfig&) const = default;
};

/// Drift Detection Method: tracks the error rate p_t and its binomial
/// deviation s_t = sqrt(p_t (1 - p_t) / t) against the best (p_min, s_min)
/// observed since the last reset.
class Ddm final : public DriftDetector {
 public:
  explicit Ddm(const DdmConfig& config = {});

  Verdict step(bool correct) override;
  void reset() override;
  std::string name() const override { return "DDM"; }

  double error_rate() const noexcept { return p_; }
  double deviation() const noexcept { return s_; }
  double p_min() const noexcept { return p_min_; }
  double s_min() const noexcept { return s_min_; }
  std::size_t count() const noexcept { return n_; }

  bool operator==(const Ddm& o) const {
    return config_ == o.config_ && n_ == o.n_ && p_ == o.p_ && s_ == o.s_ &&
           p_min_ == o.p_min_ && s_min_ == o.s_min_;
  }

 private:
  static constexpr double kInf = std::numeric_limits<double>::infinity();

  DdmConfig config_;
  std::size_t n_ = 0;
  double p_ = 0.0;
  double s_ = 0.0;
  double p_min_ = kInf;
  double s_min_ = kInf;
};

}  // namespace mddm::baseline
