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

#include "mddm/baseline/ddm.hpp"

#include <cmath>

#include "mddm/errors.hpp"

namespace mddm::baseline {

Ddm::Ddm(const DdmConfig& config) : config_(config) {
  if (!(config.warning_level > 0.0) || !(config.drift_level >= config.warning_level)) {
    throw ParameterError("DDM needs 0 < warning_level <= drift_level");
  }
}

void Ddm::reset() {
  n_ = 0;
  p_ = 0.0;
  s_ = 0.0;
  p_min_ = kInf;
  s_min_ = kInf;
}

Verdict Ddm::step(bool correct) {
  const double x = correct ? 0.0 : 1.0;
  ++n_;
  const double t = static_cast<double>(n_);
  p_ += (x - p_) / t;
  s_ = std::sqrt(p_ * (1.0 - p_) / t);

  if (n_ < config_.min_instances) {
    return Verdict::NoChange;
  }
  if (p_ + s_ < p_min_ + s_min_) {
    p_min_ = p_;
    s_min_ = s_;
  }
  // Drift is tested before warning.
  if (p_ + s_ > p_min_ + config_.drift_level * s_min_) {
    reset();
    return Verdict::Drift;
  }
  if (p_ + s_ > p_min_ + config_.warning_level * s_min_) {
    return Verdict::Warning;
  }
  return Verdict::NoChange;
}

}  // namespace mddm::baseline
