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

#include "mddm/prequential.hpp"

#include <charconv>

#include "mddm/errors.hpp"

namespace mddm::learn {

AdaptationPolicy AdaptationPolicy::parse(std::string_view text) {
  AdaptationPolicy p;
  if (text == "reset") {
    p.kind = Kind::ResetOnDrift;
  } else if (text == "none") {
    p.kind = Kind::Ignore;
  } else if (text == "blind") {
    p.kind = Kind::Blind;
  } else if (text.starts_with("blind:")) {
    p.kind = Kind::Blind;
    const auto digits = text.substr(6);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p.period);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || p.period == 0) {
      throw ConfigError("blind policy needs a positive period, got '" + std::string(text) + "'");
    }
  } else {
    throw ConfigError("unknown policy '" + std::string(text) + "' (valid: reset, none, blind:<period>)");
  }
  return p;
}

std::string AdaptationPolicy::describe() const {
  switch (kind) {
    case Kind::ResetOnDrift: return "reset";
    case Kind::Ignore: return "none";
    case Kind::Blind: return "blind:" + std::to_string(period);
  }
  return "unknown";
}

double prequential_accuracy(std::size_t correct, std::size_t processed) noexcept {
  return processed == 0 ? 0.0 : static_cast<double>(correct) / static_cast<double>(processed);
}

RunRecord prequential_run(stream::InstanceSource& source, NaiveBayes& model, DriftDetector* detector,
                          const AdaptationPolicy& policy, bool keep_bits) {
  using Kind = AdaptationPolicy::Kind;
  RunRecord record;

  while (auto inst = source.next()) {
    const bool correct = model.trained() && model.predict(inst->attributes) == inst->label;
    ++record.processed;
    if (correct) ++record.correct;
    if (keep_bits) record.bits.push_back(correct ? 1 : 0);

    if (policy.kind == Kind::Blind) {
      if (inst->position > 0 && inst->position % policy.period == 0) {
        record.alarms.push_back(inst->position);
        model.reset();
      }
    } else if (detector != nullptr) {
      const Verdict v = detector->step(correct);
      if (v == Verdict::Warning) {
        ++record.warnings;
      } else if (v == Verdict::Drift) {
        record.alarms.push_back(inst->position);
        if (policy.kind == Kind::ResetOnDrift) model.reset();
      }
    }
    model.train(*inst);
  }
  record.accuracy = prequential_accuracy(record.correct, record.processed);
  return record;
}

}  // namespace mddm::learn
