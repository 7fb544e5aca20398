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
#include <optional>
#include <vector>

#include "mddm/detector.hpp"

namespace mddm::baseline {

struct AdwinConfig {
  double delta = 0.002;
  std::size_t max_window = 32768;
  std::size_t min_sub_window = 5;

  bool operator==(const AdwinConfig&) const = default;
};

/// Adaptive windowing over the error indicator, on a plain bounded buffer.
///
/// Every step checks every cut of the window into an older part w0 (n0
/// entries) and a newer part w1 (n1 entries), both at least
/// `min_sub_window` long. A cut is significant when
///
///   |mean(w0) - mean(w1)| >= sqrt(1 / (2m) * ln(4 n / delta)),
///   m = 1 / (1/n0 + 1/n1),
///
/// and while one exists the oldest entry is dropped. Drift is reported when
/// a step dropped entries and the error estimate went up, and the window is
/// then emptied; shrinking after an improvement is silent. The scan is exhaustive in effect: runs of
/// cuts are skipped only when an interval bound proves none of them can be
/// significant.
class Adwin final : public DriftDetector {
 public:
  explicit Adwin(const AdwinConfig& config = {});

  Verdict step(bool correct) override;
  void reset() override;
  std::string name() const override { return "ADWIN"; }

  std::size_t width() const noexcept { return size_; }
  double mean() const noexcept;

  /// Window contents (1 = error), oldest first.
  std::vector<std::uint8_t> window() const;

  /// Older-part length of the first significant cut, if any.
  std::optional<std::size_t> find_cut() const;

  bool operator==(const Adwin& o) const {
    return config_ == o.config_ && window() == o.window();
  }

 private:
  std::size_t slot(std::size_t i) const noexcept { return (head_ + i) % ring_.size(); }
  std::uint64_t ones_before(std::size_t k) const noexcept;
  void drop_oldest() noexcept;

  AdwinConfig config_;
  std::vector<std::uint8_t> ring_;
  // cumulative_[slot] = ones pushed up to and including that slot.
  std::vector<std::uint64_t> cumulative_;
  std::uint64_t pushed_ones_ = 0;
  std::size_t head_ = 0;
  std::size_t size_ = 0;
};

}  // namespace mddm::baseline
