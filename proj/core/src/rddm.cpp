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

#include "mddm/baseline/rddm.hpp"

#include <algorithm>
#include <cmath>

#include "mddm/errors.hpp"

namespace mddm::baseline {

Rddm::Rddm(const RddmConfig& config) : config_(config) {
  if (!(config.warning_level > 0.0) || !(config.drift_level >= config.warning_level)) {
    throw ParameterError("RDDM needs 0 < warning_level <= drift_level");
  }
  if (config.min_stable == 0 || config.max_concept == 0) {
    throw ParameterError("RDDM needs positive min and max concept sizes");
  }
  reset();
}

void Rddm::reset_statistics() noexcept {
  n_ = 0;
  p_ = 0.0;
  s_ = 0.0;
  p_min_ = kInf;
  s_min_ = kInf;
}

void Rddm::reset() {
  stored_.assign(config_.min_stable, 0);
  first_pos_ = 0;
  last_pos_ = config_.min_stable - 1;
  num_stored_ = 0;
  warn_pos_.reset();
  warn_start_.reset();
  instances_ = 0;
  reset_statistics();
}

void Rddm::rebuild(bool track_minimum) {
  const std::size_t cap = config_.min_stable;
  reset_statistics();
  if (warn_pos_) {
    first_pos_ = *warn_pos_;
    num_stored_ = (last_pos_ + cap - first_pos_) % cap + 1;
  }
  std::size_t pos = first_pos_;
  for (std::size_t i = 0; i < num_stored_; ++i) {
    ++n_;
    const double t = static_cast<double>(n_);
    p_ += (static_cast<double>(stored_[pos]) - p_) / t;
    s_ = std::sqrt(p_ * (1.0 - p_) / t);
    if (track_minimum && n_ >= config_.min_instances && p_ + s_ < p_min_ + s_min_) {
      p_min_ = p_;
      s_min_ = s_;
    }
    pos = (pos + 1) % cap;
  }
  warn_pos_.reset();
  warn_start_.reset();
}

Verdict Rddm::step(bool correct) {
  const std::size_t cap = config_.min_stable;
  const std::uint8_t x = correct ? 0 : 1;

  last_pos_ = (last_pos_ + 1) % cap;
  stored_[last_pos_] = x;
  if (num_stored_ < cap) {
    ++num_stored_;
  } else {
    first_pos_ = (first_pos_ + 1) % cap;
    if (warn_pos_ == last_pos_) warn_pos_.reset();
  }

  ++n_;
  ++instances_;
  const double t = static_cast<double>(n_);
  p_ += (static_cast<double>(x) - p_) / t;
  s_ = std::sqrt(p_ * (1.0 - p_) / t);

  if (n_ < config_.min_instances) {
    return Verdict::NoChange;
  }
  if (p_ + s_ < p_min_ + s_min_) {
    p_min_ = p_;
    s_min_ = s_;
  }

  if (p_ + s_ > p_min_ + config_.drift_level * s_min_) {
    if (!warn_start_) {
      first_pos_ = last_pos_;
      num_stored_ = 1;
    }
    rebuild(true);
    return Verdict::Drift;
  }

  bool warning = false;
  if (p_ + s_ > p_min_ + config_.warning_level * s_min_) {
    if (warn_start_ && *warn_start_ + config_.warn_limit <= instances_) {
      first_pos_ = last_pos_;
      num_stored_ = 1;
      warn_pos_.reset();
      warn_start_.reset();
      rebuild(true);
      return Verdict::Drift;
    }
    warning = true;
    if (!warn_start_) {
      warn_start_ = instances_;
      warn_pos_ = last_pos_;
    }
  } else {
    warn_start_.reset();
    warn_pos_.reset();
  }

  if (n_ > config_.max_concept && !warning) {
    // A concept that never produced an error has nothing to react to; its
    // statistics are still rebuilt from the retained segment, silently.
    const bool degraded = p_ > 0.0;
    rebuild(false);
    return degraded ? Verdict::Drift : Verdict::NoChange;
  }
  return warning ? Verdict::Warning : Verdict::NoChange;
}

}  // namespace mddm::baseline
