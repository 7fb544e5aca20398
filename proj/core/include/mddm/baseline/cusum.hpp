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

struct CusumConfig {
  double delta = 0.005;     // allowed change magnitude
  double threshold = 50.0;  // alarm threshold lambda
  std::size_t min_instances = 30;
  // Feed x_t - mean(x_1..x_t) instead of the raw error indicator.
  bool subtract_mean = true;

  bool operator==(const CusumConfig&) const = default;
};

/// One-sided CUSUM on the error indicator:
///   g_t = max(0, g_{t-1} + (x_t - delta)),  Drift when g_t > threshold.
class Cusum final : public DriftDetector {
 public:
  explicit Cusum(const CusumConfig& config = {});

  Verdict step(bool correct) override;
  void reset() override;
  std::string name() const override { return "CUSUM"; }

  double statistic() const noexcept { return g_; }
  std::size_t count() const noexcept { return n_; }

  bool operator==(const Cusum& o) const {
    return config_ == o.config_ && g_ == o.g_ && mean_ == o.mean_ && n_ == o.n_;
  }

 private:
  CusumConfig config_;
  double g_ = 0.0;
  double mean_ = 0.0;
  std::size_t n_ = 0;
};

}  // namespace mddm::baseline
