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

struct PageHinkleyConfig {
  double delta = 0.005;
  double threshold = 50.0;
  std::size_t min_instances = 30;

  bool operator==(const PageHinkleyConfig&) const = default;
};

/// Page-Hinkley test for an increase in the error rate.
///
/// m_T accumulates x_t - mean_t - delta, M_T = min(m_1..m_T); Drift when
/// m_T - M_T > threshold.
class PageHinkley final : public DriftDetector {
 public:
  explicit PageHinkley(const PageHinkleyConfig& config = {});

  Verdict step(bool correct) override;
  void reset() override;
  std::string name() const override { return "PageHinkley"; }

  double cumulative() const noexcept { return m_; }
  double minimum() const noexcept { return min_m_; }
  std::size_t count() const noexcept { return n_; }

  bool operator==(const PageHinkley& o) const {
    return config_ == o.config_ && mean_ == o.mean_ && m_ == o.m_ && min_m_ == o.min_m_ &&
           n_ == o.n_;
  }

 private:
  PageHinkleyConfig config_;
  double mean_ = 0.0;
  double m_ = 0.0;
  double min_m_ = std::numeric_limits<double>::infinity();
  std::size_t n_ = 0;
};

}  // namespace mddm::baseline
