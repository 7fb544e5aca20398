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
#include <limits>
#include <optional>
#include <vector>

#include "mddm/detector.hpp"

namespace mddm::baseline {

struct RddmConfig {
  double warning_level = 1.773;
  double drift_level = 2.258;
  std::size_t max_concept = 40000;   // "max": longest concept before a forced drift
  std::size_t min_stable = 7000;     // "min": size of the retained recent segment
  std::size_t warn_limit = 1400;     // longest tolerated warning zone
  std::size_t min_instances = 129;

  bool operator==(const RddmConfig&) const = default;
};

/// Reactive Drift Detection Method: DDM statistics plus three drift
/// triggers (statistical level, concept longer than `max_concept`, warning
/// zone longer than `warn_limit`).
///
/// The last `min_stable` outcomes are retained. After a drift the statistics
/// are rebuilt from the retained outcomes starting at the beginning of the
/// current warning zone, or from the triggering outcome alone when no
/// warning preceded the drift. When the concept-length trigger fires the
/// rebuild covers the whole retained segment.
class Rddm final : public DriftDetector {
 public:
  explicit Rddm(const RddmConfig& config = {});

  Verdict step(bool correct) override;
  void reset() override;
  std::string name() const override { return "RDDM"; }

  /// Outcomes in the current statistics.
  std::size_t count() const noexcept { return n_; }
  double error_rate() const noexcept { return p_; }
  std::size_t stored() const noexcept { return num_stored_; }

  bool operator==(const Rddm& o) const {
    return config_ == o.config_ && stored_ == o.stored_ && first_pos_ == o.first_pos_ &&
           last_pos_ == o.last_pos_ && num_stored_ == o.num_stored_ && warn_pos_ == o.warn_pos_ &&
           warn_start_ == o.warn_start_ && instances_ == o.instances_ && n_ == o.n_ &&
           p_ == o.p_ && s_ == o.s_ && p_min_ == o.p_min_ && s_min_ == o.s_min_;
  }

 private:
  static constexpr double kInf = std::numeric_limits<double>::infinity();

  void reset_statistics() noexcept;
  void rebuild(bool track_minimum);

  RddmConfig config_;

  std::vector<std::uint8_t> stored_;
  std::size_t first_pos_ = 0;
  std::size_t last_pos_ = 0;
  std::size_t num_stored_ = 0;
  std::optional<std::size_t> warn_pos_;
  std::optional<std::size_t> warn_start_;
  std::size_t instances_ = 0;

  std::size_t n_ = 0;
  double p_ = 0.0;
  double s_ = 0.0;
  double p_min_ = kInf;
  double s_min_ = kInf;
};

}  // namespace mddm::baseline
