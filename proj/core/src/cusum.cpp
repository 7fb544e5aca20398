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

#include "mddm/baseline/cusum.hpp"

#include <algorithm>
#include <cmath>

#include "mddm/errors.hpp"

namespace mddm::baseline {

Cusum::Cusum(const CusumConfig& config) : config_(config) {
  if (!(config.threshold > 0.0) || !std::isfinite(config.delta)) {
    throw ParameterError("CUSUM needs a positive threshold and a finite delta");
  }
}

void Cusum::reset() {
  g_ = 0.0;
  mean_ = 0.0;
  n_ = 0;
}

Verdict Cusum::step(bool correct) {
  const double x = correct ? 0.0 : 1.0;
  ++n_;
  mean_ += (x - mean_) / static_cast<double>(n_);
  const double signal = config_.subtract_mean ? x - mean_ : x;
  g_ = std::max(0.0, g_ + (signal - config_.delta));
  if (n_ < config_.min_instances) {
    return Verdict::NoChange;
  }
  if (g_ > config_.threshold) {
    reset();
    return Verdict::Drift;
  }
  return Verdict::NoChange;
}

}  // namespace mddm::baseline
