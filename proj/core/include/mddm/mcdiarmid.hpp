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

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mddm/detector.hpp"
#include "mddm/weights.hpp"

namespace mddm {

struct McDiarmidConfig {
  std::size_t window_size = 25;
  double delta = 1e-6;
  WeightScheme scheme = Arithmetic{};
};

/// Weighted mean sum(p_i w_i) / sum(w_i) of a full window, bits ordered
/// oldest first. Sizes must match.
double weighted_mean(std::span<const std::uint8_t> bits, std::span<const double> weights);

/// McDiarmid drift detector over a weighted sliding window of prediction
/// outcomes (MDDM-A/G/E; FHDDM with uniform weights).
///
/// The window holds the last n outcomes. Once full, each step computes the
/// weighted mean mu_t, raises mu_max to mu_t when exceeded, and signals
/// Drift when mu_max - mu_t >= epsilon, emptying the window. epsilon depends
/// only on the weights and delta and is fixed at construction.
class McDiarmidDetector final : public DriftDetector {
 public:
  explicit McDiarmidDetector(const McDiarmidConfig& config);

  /// Arbitrary positive weights, oldest slot first.
  McDiarmidDetector(std::vector<double> weights, double delta, std::string label = "MDDM");

  Verdict step(bool correct) override;
  void reset() override;
  std::string name() const override { return label_; }

  std::size_t capacity() const noexcept { return weights_.size(); }
  std::size_t size() const noexcept { return size_; }
  bool full() const noexcept { return size_ == weights_.size(); }
  double epsilon() const noexcept { return epsilon_; }
  double delta() const noexcept { return delta_; }
  double max_mean() const noexcept { return max_mean_; }
  std::span<const double> weights() const noexcept { return weights_; }

  /// Window contents, oldest first.
  std::vector<std::uint8_t> bits() const;

  /// Current weighted mean; throws ContractError while the window is not full.
  double weighted_mean() const;

  /// Field-by-field state comparison (weights, bound, window, mu_max).
  bool operator==(const McDiarmidDetector& other) const;

 private:
  double current_mean() const noexcept;

  std::string label_;
  std::vector<double> weights_;
  double weight_sum_ = 0.0;
  double delta_ = 0.0;
  double epsilon_ = 0.0;

  // Ring buffer: slot `head_` is the oldest entry.
  std::vector<std::uint8_t> ring_;
  std::size_t head_ = 0;
  std::size_t size_ = 0;
  double max_mean_ = 0.0;
};

McDiarmidDetector make_mddm_a(std::size_t n = 25, double delta = 1e-6, double d = 0.01);
McDiarmidDetector make_mddm_g(std::size_t n = 25, double delta = 1e-6, double r = 1.01);
McDiarmidDetector make_mddm_e(std::size_t n = 25, double delta = 1e-6, double lambda = 0.01);
McDiarmidDetector make_fhddm(std::size_t n = 25, double delta = 1e-6);

}  // namespace mddm
