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

#include "mddm/baseline/adwin.hpp"

#include <algorithm>
#include <cmath>

#include "mddm/errors.hpp"

namespace mddm::baseline {

Adwin::Adwin(const AdwinConfig& config) : config_(config) {
  if (!(config.delta > 0.0 && config.delta < 1.0)) {
    throw ParameterError("ADWIN delta must lie in (0, 1)");
  }
  if (config.min_sub_window == 0 || config.max_window < 2 * config.min_sub_window) {
    throw ParameterError("ADWIN window must hold two sub-windows");
  }
  ring_.assign(config.max_window, 0);
  cumulative_.assign(config.max_window, 0);
}

void Adwin::reset() {
  std::fill(ring_.begin(), ring_.end(), std::uint8_t{0});
  std::fill(cumulative_.begin(), cumulative_.end(), std::uint64_t{0});
  pushed_ones_ = 0;
  head_ = 0;
  size_ = 0;
}

double Adwin::mean() const noexcept {
  if (size_ == 0) return 0.0;
  return static_cast<double>(ones_before(size_)) / static_cast<double>(size_);
}

std::vector<std::uint8_t> Adwin::window() const {
  std::vector<std::uint8_t> out(size_);
  for (std::size_t i = 0; i < size_; ++i) out[i] = ring_[slot(i)];
  return out;
}

std::uint64_t Adwin::ones_before(std::size_t k) const noexcept {
  if (k == 0 || size_ == 0) return 0;
  const std::size_t oldest = slot(0);
  const std::uint64_t base = cumulative_[oldest] - ring_[oldest];
  return cumulative_[slot(k - 1)] - base;
}

void Adwin::drop_oldest() noexcept {
  head_ = (head_ + 1) % ring_.size();
  --size_;
}

std::optional<std::size_t> Adwin::find_cut() const {
  const std::size_t n = size_;
  const std::size_t lo = config_.min_sub_window;
  if (n < 2 * lo) return std::nullopt;

  const double nd = static_cast<double>(n);
  const double total = static_cast<double>(ones_before(n));
  const double half_log = 0.5 * std::log(4.0 * nd / config_.delta);
  const std::size_t hi = n - lo;

  auto significant = [&](std::size_t k) {
    const double n0 = static_cast<double>(k);
    const double n1 = nd - n0;
    const double s0 = static_cast<double>(ones_before(k));
    const double diff = s0 / n0 - (total - s0) / n1;
    return diff * diff >= (1.0 / n0 + 1.0 / n1) * half_log;
  };

  // True when no cut in (k, k + span] can be significant.
  auto provably_quiet = [&](std::size_t k, std::size_t span) {
    const double a = static_cast<double>(k + 1);
    const double b = static_cast<double>(k + span);
    const double j = static_cast<double>(span);
    const double s0 = static_cast<double>(ones_before(k));
    const double s1 = total - s0;
    const double lo0 = s0 / b;
    const double hi0 = std::min(1.0, (s0 + j) / a);
    const double lo1 = std::max(0.0, s1 - j) / (nd - a);
    const double hi1 = std::min(1.0, s1 / (nd - b));
    const double max_diff = std::max(hi0 - lo1, hi1 - lo0);
    if (max_diff <= 0.0) return true;
    auto h = [&](double x) { return 1.0 / x + 1.0 / (nd - x); };
    const double mid = nd / 2.0;
    const double h_min = (a <= mid && mid <= b) ? 4.0 / nd : std::min(h(a), h(b));
    return max_diff * max_diff < h_min * half_log * (1.0 - 1e-9);
  };

  std::size_t span = 1;
  for (std::size_t k = lo; k <= hi;) {
    if (significant(k)) return k;
    span = std::min(2 * span, hi - k);
    while (span > 0 && !provably_quiet(k, span)) span /= 2;
    k += span + 1;
    span = std::max<std::size_t>(span, 1);
  }
  return std::nullopt;
}

Verdict Adwin::step(bool correct) {
  if (size_ == ring_.size()) {
    drop_oldest();
  }
  const std::uint8_t x = correct ? 0 : 1;
  const std::size_t s = slot(size_);
  ring_[s] = x;
  pushed_ones_ += x;
  cumulative_[s] = pushed_ones_;
  ++size_;

  const double before = mean();
  bool dropped = false;
  while (find_cut()) {
    drop_oldest();
    dropped = true;
  }
  if (dropped && mean() > before) {
    reset();
    return Verdict::Drift;
  }
  return Verdict::NoChange;
}

}  // namespace mddm::baseline
