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

#include "mddm/baseline/page_hinkley.hpp"

#include <algorithm>
#include <cmath>

#include "mddm/errors.hpp"

namespace mddm::baseline {

PageHinkley::PageHinkley(const PageHinkleyConfig& config) : config_(config) {
  if (!(config.threshold > 0.0) || !std::isfinite(config.delta)) {
    throw ParameterError("Page-Hinkley needs a positive threshold and a finite delta");
  }
}

void PageHinkley::reset() {
  mean_ = 0.0;
  m_ = 0.0;
  min_m_ = std::numeric_limits<double>::infinity();
  n_ = 0;
}

Verdict PageHinkley::step(bool correct) {
  const double x = correct ? 0.0 : 1.0;
  ++n_;
  mean_ += (x - mean_) / static_cast<double>(n_);
  m_ += x - mean_ - config_.delta;
  min_m_ = std::min(min_m_, m_);
  if (n_ < config_.min_instances) {
    return Verdict::NoChange;
  }
  if (m_ - min_m_ > config_.threshold) {
    reset();
    return Verdict::Drift;
  }
  return Verdict::NoChange;
}

}  // namespace mddm::baseline
