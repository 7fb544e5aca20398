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

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mddm/instance.hpp"

namespace mddm::stream {

/// Optional column declarations for a CSV file. Undeclared columns are
/// numeric when their first data value parses as a number (or is "?"),
/// nominal otherwise. The last column is always the label.
struct CsvSchema {
  // Nominal columns with a pre-seeded vocabulary; values not listed are
  // appended in first-seen order.
  std::map<std::string, std::vector<std::string>> nominal;
  std::set<std::string> numeric;
  // Pre-seeded label vocabulary.
  std::vector<std::string> label_values;
};

/// Declarations that reproduce `schema`'s codes when reading back a file
/// written by dump_csv.
CsvSchema csv_schema_for(const Schema& schema);

/// Streams a comma-separated file with one header row, "." decimals and the
/// class label in the last column. Rows are read one at a time; nominal
/// values and labels are interned to integer codes in first-seen order.
/// "?" marks a missing attribute value.
class CsvStream final : public InstanceSource {
 public:
  explicit CsvStream(const std::filesystem::path& path, CsvSchema declared = {});

  const Schema& schema() const override { return schema_; }

  /// Throws DataError naming the line for malformed rows.
  std::optional<LabeledInstance> next() override;

 private:
  void settle_kinds(const std::vector<std::string>& fields);
  bool read_row(std::vector<std::string>& fields);
  std::uint32_t intern(std::vector<std::string>& vocabulary, const std::string& value);

  std::ifstream in_;
  CsvSchema declared_;
  Schema schema_;
  std::vector<bool> settled_;
  // First data row, read ahead so attribute kinds are known up front.
  std::optional<std::vector<std::string>> pending_;
  std::size_t pending_line_ = 0;
  std::size_t line_ = 0;
  std::size_t position_ = 0;
};

std::vector<LabeledInstance> load_csv_stream(const std::filesystem::path& path, CsvSchema declared = {});

/// Writes instances as CSV (attributes..., label) with a header row.
/// Numeric values use 17 significant digits.
void write_csv(std::ostream& out, const Schema& schema, const std::vector<LabeledInstance>& instances);

}  // namespace mddm::stream
