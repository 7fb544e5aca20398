
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

// Independent reference implementations used as test oracles. They follow
// the textbook definitions with plain loops and no incremental state.
#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <vector>

#include "mddm/detector.hpp"

namespace mddm::oracle {

/// Direct evaluator of the weighted-window detector: full recomputation of
/// the weighted mean, bound and maximum on every step.
class WindowDetector {
 public:
  WindowDetector(std::vector<double> weights, double delta) : w_(std::move(weights)) {
    double sum = 0.0;
    for (double x : w_) sum += x;
    double sq = 0.0;
    for (double x : w_) sq += (x / sum) * (x / sum);
    eps_ = std::sqrt(sq / 2.0 * std::log(1.0 / delta));
  }

  Verdict step(bool bit) {
    if (bits_.size() == w_.size()) bits_.pop_front();
    bits_.push_back(bit ? 1 : 0);
    if (bits_.size() < w_.size()) return Verdict::NoChange;
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < w_.size(); ++i) {
      num += bits_[i] * w_[i];
      den += w_[i];
    }
    const double mu = num / den;
    if (max_ < mu) max_ = mu;
    if (max_ - mu >= eps_) {
      bits_.clear();
      max_ = 0.0;
      return Verdict::Drift;
    }
    return Verdict::NoChange;
  }

  double epsilon() const { return eps_; }

 private:
  std::vector<double> w_;
  std::deque<int> bits_;
  double eps_ = 0.0;
  double max_ = 0.0;
};

inline std::vector<double> arithmetic(std::size_t n, double d) {
  std::vector<double> w;
  for (std::size_t i = 1; i <= n; ++i) w.push_back(1.0 + static_cast<double>(i - 1) * d);
  return w;
}

inline std::vector<double> geometric(std::size_t n, double r) {
  std::vector<double> w;
  double x = 1.0;
  for (std::size_t i = 1; i <= n; ++i) {
    w.push_back(x);
    x *= r;
  }
  return w;
}

inline std::vector<double> euler(std::size_t n, double lambda) {
  std::vector<double> w;
  for (std::size_t i = 1; i <= n; ++i) w.push_back(std::exp(lambda * static_cast<double>(i - 1)));
  return w;
}

/// Index (1-based) of the first zero at which the detector alarms when fed
/// n ones followed by zeros, or 0 if it never does within `limit` zeros.
template <class Detector>
std::size_t zeros_until_drift(Detector& det, std::size_t n, std::size_t limit = 1000) {
  for (std::size_t i = 0; i < n; ++i) det.step(true);
  for (std::size_t k = 1; k <= limit; ++k) {
    if (det.step(false) == Verdict::Drift) return k;
  }
  return 0;
}

/// Region-membership scorer: for every drift, scans all alarms.
struct Score {
  std::size_t tp = 0, fp = 0, fn = 0;
  std::vector<std::size_t> delays;
};

inline Score score(const std::vector<std::size_t>& alarms, const std::vector<std::size_t>& drifts,
                   std::size_t accept) {
  Score s;
  std::vector<bool> used(alarms.size(), false);
  for (std::size_t d : drifts) {
    bool hit = false;
    for (std::size_t a = 0; a < alarms.size(); ++a) {
      if (alarms[a] > d && alarms[a] <= d + accept) {
        used[a] = true;
        if (!hit) {
          s.delays.push_back(alarms[a] - d);
          hit = true;
        }
      }
    }
    if (hit) {
      ++s.tp;
    } else {
      ++s.fn;
      s.delays.push_back(accept);
    }
  }
  for (bool u : used) s.fp += u ? 0 : 1;
  return s;
}

/// True if some cut of `bits` (1 = error, oldest first) with both parts at
/// least `min_len` long is significant under the ADWIN bound.
inline bool adwin_has_cut(const std::vector<std::uint8_t>& bits, double delta, std::size_t min_len) {
  const std::size_t n = bits.size();
  std::vector<double> prefix(n + 1, 0.0);
  for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + bits[i];
  for (std::size_t n0 = min_len; n0 + min_len <= n; ++n0) {
    const double n1 = static_cast<double>(n - n0);
    const double mean0 = prefix[n0] / static_cast<double>(n0);
    const double mean1 = (prefix[n] - prefix[n0]) / n1;
    const double m = 1.0 / (1.0 / static_cast<double>(n0) + 1.0 / n1);
    const double eps = std::sqrt(1.0 / (2.0 * m) * std::log(4.0 * static_cast<double>(n) / delta));
    if (std::fabs(mean0 - mean1) >= eps) return true;
  }
  return false;
}

/// Step-by-step ADWIN on a plain vector.
class AdwinModel {
 public:
  AdwinModel(double delta, std::size_t min_len, std::size_t cap) : delta_(delta), min_len_(min_len), cap_(cap) {}

  Verdict step(bool correct) {
    if (bits_.size() == cap_) bits_.erase(bits_.begin());
    bits_.push_back(correct ? 0 : 1);
    const double before = mean();
    bool dropped = false;
    while (adwin_has_cut(bits_, delta_, min_len_)) {
      bits_.erase(bits_.begin());
      dropped = true;
    }
    if (dropped && mean() > before) {
      bits_.clear();
      return Verdict::Drift;
    }
    return Verdict::NoChange;
  }

  double mean() const {
    if (bits_.empty()) return 0.0;
    double s = 0.0;
    for (auto b : bits_) s += b;
    return s / static_cast<double>(bits_.size());
  }

  const std::vector<std::uint8_t>& window() const { return bits_; }

 private:
  double delta_;
  std::size_t min_len_;
  std::size_t cap_;
  std::vector<std::uint8_t> bits_;
};

}  // namespace mddm::oracle
