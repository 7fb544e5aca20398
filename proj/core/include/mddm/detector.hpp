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
#include <memory>
#include <string>
#include <string_view>

namespace mddm {

/// Per-instance output of a drift detector.
enum class Verdict : std::uint8_t { NoChange, Warning, Drift };

std::string_view to_string(Verdict v) noexcept;

/// Common interface for every detector in the library.
///
/// Detectors consume one prequential outcome per call, `correct == true`
/// meaning the classifier predicted the instance's label. Detectors that
/// monitor an error signal complement the bit internally.
///
/// Instances are single-stream mutable state: they may be moved across
/// threads but must not be stepped concurrently.
class DriftDetector {
 public:
  virtual ~DriftDetector() = default;

  virtual Verdict step(bool correct) = 0;
  virtual void reset() = 0;
  virtual std::string name() const = 0;
};

using DetectorPtr = std::unique_ptr<DriftDetector>;

}  // namespace mddm
