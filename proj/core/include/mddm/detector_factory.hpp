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

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mddm/detector.hpp"

namespace mddm {

/// A detector name plus parameter overrides, as given on the command line.
struct DetectorSpec {
  std::string name = "mddm-a";
  std::map<std::string, std::string> params;
  std::optional<std::size_t> window_size;
  std::optional<double> delta;
};

/// Registered detector keys, in report order. "none" disables detection.
const std::vector<std::string>& detector_names();

/// Normalizes case and aliases ("ph" -> "page-hinkley"). Throws ConfigError
/// listing the valid names for an unknown detector.
std::string canonical_detector(std::string_view name);

/// Parameter keys accepted by a detector's `params`.
const std::vector<std::string>& detector_parameters(std::string_view name);

/// Builds a fresh detector; null for "none". `default_window` applies to the
/// windowed McDiarmid family when neither `window_size` nor an "n" parameter
/// is given. Throws ConfigError for unknown parameters or unparsable values
/// and ParameterError for values outside a detector's domain.
DetectorPtr make_detector(const DetectorSpec& spec, std::size_t default_window = 25);

/// Report label, e.g. "MDDM-A" or "MDDM-A[delta=0.01]".
std::string display_name(const DetectorSpec& spec);

}  // namespace mddm
