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
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mddm::stream {

enum class AttributeKind : std::uint8_t { Numeric, Nominal };

struct Attribute {
  std::string name;
  AttributeKind kind = AttributeKind::Numeric;
  // Nominal vocabulary in code order. May grow while a CSV file is read.
  std::vector<std::string> values;
};

struct Schema {
  std::vector<Attribute> attributes;
  std::string label_name = "class";
  std::vector<std::string> label_values;

  std::size_t arity() const noexcept { return attributes.size(); }
};

/// One stream element. Nominal attributes hold their integer code as a
/// double; a missing value is NaN.
struct LabeledInstance {
  std::size_t position = 0;
  std::vector<double> attributes;
  std::uint32_t label = 0;
  // Ground truth used only by the harness: the label before class noise and
  // the concept the instance was drawn from.
  std::uint32_t clean_label = 0;
  std::uint32_t concept_index = 0;
};

/// Pull-based instance stream.
class InstanceSource {
 public:
  virtual ~InstanceSource() = default;

  /// Current schema. CSV sources extend nominal vocabularies as they read.
  virtual const Schema& schema() const = 0;
  virtual std::optional<LabeledInstance> next() = 0;
};

}  // namespace mddm::stream
