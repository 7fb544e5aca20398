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

#include "mddm/mcdiarmid.hpp"

#include <algorithm>

#include "mddm/errors.hpp"

namespace mddm {

namespace {

double sum_weights(std::span<const double> weights) {
  CompensatedSum s;
  for (double w : weights) s.add(w);
  return s.value();
}

std::string label_for(const WeightScheme& scheme) {
  switch (scheme.index()) {
    case 0: return "MDDM-A";
    case 1: return "MDDM-G";
    case 2: return "MDDM-E";
    default: return "FHDDM";
  }
}

}  // namespace

double weighted_mean(std::span<const std::uint8_t> bits, std::span<const double> weights) {
  if (bits.size() != weights.size() || bits.empty()) {
    throw ContractError("weighted_mean needs one weight per bit");
  }
  CompensatedSum num;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != 0) num.add(weights[i]);
  }
  return num.value() / sum_weights(weights);
}

McDiarmidDetector::McDiarmidDetector(const McDiarmidConfig& config)
    : McDiarmidDetector(build_weights(config.scheme, config.window_size), config.delta,
                        label_for(config.scheme)) {}

McDiarmidDetector::McDiarmidDetector(std::vector<double> weights, double delta, std::string label)
    : label_(std::move(label)), weights_(std::move(weights)), delta_(delta) {
  epsilon_ = compute_epsilon(weights_, delta_);
  weight_sum_ = sum_weights(weights_);
  ring_.assign(weights_.size(), 0);
}

void McDiarmidDetector::reset() {
  std::fill(ring_.begin(), ring_.end(), std::uint8_t{0});
  head_ = 0;
  size_ = 0;
  max_mean_ = 0.0;
}

Verdict McDiarmidDetector::step(bool correct) {
  const std::size_t n = weights_.size();
  if (size_ == n) {
    head_ = (head_ + 1) % n;
    --size_;
  }
  ring_[(head_ + size_) % n] = correct ? 1 : 0;
  ++size_;
  if (size_ < n) {
    return Verdict::NoChange;
  }

  const double mean = current_mean();
  if (max_mean_ < mean) {
    max_mean_ = mean;
  }
  if (max_mean_ - mean >= epsilon_) {
    reset();
    return Verdict::Drift;
  }
  return Verdict::NoChange;
}

double McDiarmidDetector::current_mean() const noexcept {
  const std::size_t n = weights_.size();
  CompensatedSum num;
  for (std::size_t i = 0; i < n; ++i) {
    if (ring_[(head_ + i) % n] != 0) num.add(weights_[i]);
  }
  return num.value() / weight_sum_;
}

double McDiarmidDetector::weighted_mean() const {
  if (!full()) {
    throw ContractError("weighted mean is only defined on a full window");
  }
  return current_mean();
}

std::vector<std::uint8_t> McDiarmidDetector::bits() const {
  std::vector<std::uint8_t> out(size_);
  for (std::size_t i = 0; i < size_; ++i) out[i] = ring_[(head_ + i) % ring_.size()];
  return out;
}

bool McDiarmidDetector::operator==(const McDiarmidDetector& other) const {
  return label_ == other.label_ && weights_ == other.weights_ && weight_sum_ == other.weight_sum_ &&
         delta_ == other.delta_ && epsilon_ == other.epsilon_ && ring_ == other.ring_ &&
         head_ == other.head_ && size_ == other.size_ && max_mean_ == other.max_mean_;
}

McDiarmidDetector make_mddm_a(std::size_t n, double delta, double d) {
  return McDiarmidDetector(McDiarmidConfig{n, delta, Arithmetic{d}});
}

McDiarmidDetector make_mddm_g(std::size_t n, double delta, double r) {
  return McDiarmidDetector(McDiarmidConfig{n, delta, Geometric{r}});
}

McDiarmidDetector make_mddm_e(std::size_t n, double delta, double lambda) {
  return McDiarmidDetector(McDiarmidConfig{n, delta, Euler{lambda}});
}

McDiarmidDetector make_fhddm(std::size_t n, double delta) {
  return McDiarmidDetector(McDiarmidConfig{n, delta, Uniform{}});
}

}  // namespace mddm
