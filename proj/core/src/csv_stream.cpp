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

#include "mddm/csv_stream.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>

#include "mddm/errors.hpp"

namespace mddm::stream {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
  s = s.substr(b, e - b);
  if (s.size() >= 2 && ((s.front() == '"' && s.back() == '"') || (s.front() == '\'' && s.back() == '\''))) {
    s = s.substr(1, s.size() - 2);
  }
  return std::string(s);
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(trim(std::string_view(line).substr(start)));
      break;
    }
    fields.push_back(trim(std::string_view(line).substr(start, comma - start)));
    start = comma + 1;
  }
  return fields;
}

bool parse_number(const std::string& s, double& out) {
  if (s.empty()) return false;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (*first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last && std::isfinite(out);
}

bool is_blank(const std::string& line) {
  for (char c : line) {
    if (c != ' ' && c != '\t' && c != '\r') return false;
  }
  return true;
}

constexpr const char* kMissing = "?";

}  // namespace

CsvSchema csv_schema_for(const Schema& schema) {
  CsvSchema out;
  for (const auto& a : schema.attributes) {
    if (a.kind == AttributeKind::Nominal) {
      out.nominal[a.name] = a.values;
    } else {
      out.numeric.insert(a.name);
    }
  }
  out.label_values = schema.label_values;
  return out;
}

CsvStream::CsvStream(const std::filesystem::path& path, CsvSchema declared)
    : in_(path), declared_(std::move(declared)) {
  if (!in_) {
    throw DataError("cannot open CSV file '" + path.string() + "'");
  }
  std::string header;
  while (std::getline(in_, header)) {
    ++line_;
    if (!is_blank(header)) break;
  }
  if (is_blank(header)) {
    throw DataError("CSV file '" + path.string() + "' has no header row", line_);
  }
  const auto names = split(header);
  if (names.size() < 2) {
    throw DataError("CSV header needs at least one attribute and a label column", line_);
  }
  for (std::size_t i = 0; i + 1 < names.size(); ++i) {
    Attribute a;
    a.name = names[i];
    settled_.push_back(false);
    if (auto it = declared_.nominal.find(a.name); it != declared_.nominal.end()) {
      a.kind = AttributeKind::Nominal;
      a.values = it->second;
      settled_.back() = true;
    } else if (declared_.numeric.count(a.name) != 0) {
      settled_.back() = true;
    }
    schema_.attributes.push_back(std::move(a));
  }
  schema_.label_name = names.back();
  schema_.label_values = declared_.label_values;

  std::vector<std::string> first;
  if (read_row(first)) {
    settle_kinds(first);
    pending_ = std::move(first);
    pending_line_ = line_;
  }
}

bool CsvStream::read_row(std::vector<std::string>& fields) {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_;
    if (is_blank(line)) continue;
    fields = split(line);
    const std::size_t expected = schema_.arity() + 1;
    if (fields.size() != expected) {
      throw DataError("expected " + std::to_string(expected) + " fields, found " +
                          std::to_string(fields.size()),
                      line_);
    }
    return true;
  }
  if (in_.bad()) {
    throw DataError("read error", line_);
  }
  return false;
}

void CsvStream::settle_kinds(const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < settled_.size(); ++i) {
    if (settled_[i]) continue;
    double ignored = 0.0;
    const bool numeric = fields[i] == kMissing || parse_number(fields[i], ignored);
    schema_.attributes[i].kind = numeric ? AttributeKind::Numeric : AttributeKind::Nominal;
    settled_[i] = true;
  }
}

std::uint32_t CsvStream::intern(std::vector<std::string>& vocabulary, const std::string& value) {
  for (std::size_t i = 0; i < vocabulary.size(); ++i) {
    if (vocabulary[i] == value) return static_cast<std::uint32_t>(i);
  }
  vocabulary.push_back(value);
  return static_cast<std::uint32_t>(vocabulary.size() - 1);
}

std::optional<LabeledInstance> CsvStream::next() {
  std::vector<std::string> fields;
  std::size_t row_line = 0;
  if (pending_) {
    fields = std::move(*pending_);
    pending_.reset();
    row_line = pending_line_;
  } else if (read_row(fields)) {
    row_line = line_;
  } else {
    return std::nullopt;
  }

  LabeledInstance inst;
  inst.position = position_++;
  inst.attributes.resize(schema_.arity());
  for (std::size_t i = 0; i < schema_.arity(); ++i) {
    const std::string& f = fields[i];
    if (f == kMissing) {
      inst.attributes[i] = std::numeric_limits<double>::quiet_NaN();
      continue;
    }
    auto& attr = schema_.attributes[i];
    if (attr.kind == AttributeKind::Numeric) {
      double v = 0.0;
      if (!parse_number(f, v)) {
        throw DataError("column '" + attr.name + "' expects a number, found '" + f + "'", row_line);
      }
      inst.attributes[i] = v;
    } else {
      inst.attributes[i] = static_cast<double>(intern(attr.values, f));
    }
  }
  const std::string& label = fields.back();
  if (label.empty() || label == kMissing) {
    throw DataError("missing class label", row_line);
  }
  inst.label = intern(schema_.label_values, label);
  inst.clean_label = inst.label;
  return inst;
}

std::vector<LabeledInstance> load_csv_stream(const std::filesystem::path& path, CsvSchema declared) {
  CsvStream source(path, std::move(declared));
  std::vector<LabeledInstance> out;
  while (auto inst = source.next()) out.push_back(std::move(*inst));
  return out;
}

void write_csv(std::ostream& out, const Schema& schema, const std::vector<LabeledInstance>& instances) {
  for (const auto& a : schema.attributes) out << a.name << ',';
  out << schema.label_name << '\n';

  char buf[64];
  for (const auto& inst : instances) {
    for (std::size_t i = 0; i < schema.arity(); ++i) {
      const double v = inst.attributes[i];
      const auto& attr = schema.attributes[i];
      if (std::isnan(v)) {
        out << kMissing;
      } else if (attr.kind == AttributeKind::Nominal) {
        out << attr.values.at(static_cast<std::size_t>(v));
      } else {
        std::snprintf(buf, sizeof buf, "%.17g", v);
        out << buf;
      }
      out << ',';
    }
    out << schema.label_values.at(inst.label) << '\n';
  }
}

}  // namespace mddm::stream
