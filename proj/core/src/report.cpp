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

#include "mddm/report.hpp"

#include <cstdio>
#include <iomanip>
#include <map>
#include <string>

namespace mddm::experiment {

namespace {

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string pm(const eval::MeanStd& s, double scale = 1.0) {
  return fixed(s.mean * scale, 2) + " +- " + fixed(s.std * scale, 2);
}

// Quotes a field when it contains a separator.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

void write_runs_csv(std::ostream& out, std::span<const CellResult> cells) {
  out << "stream,detector,seed,run,delay_mean,tp,fp,fn,accuracy,alarm_count\n";
  for (const auto& cell : cells) {
    for (const auto& r : cell.runs) {
      out << csv_field(cell.stream) << ',' << csv_field(cell.detector) << ',' << r.seed << ',' << r.run << ',';
      if (cell.scored) {
        out << fixed(r.score.mean_delay(), 4) << ',' << r.score.tp << ',' << r.score.fp << ',' << r.score.fn;
      } else {
        out << ",,,";
      }
      out << ',' << fixed(r.score.accuracy, 6) << ',' << r.score.alarm_count << '\n';
    }
  }
}

void write_summary_csv(std::ostream& out, std::span<const CellResult> cells) {
  out << "stream,detector,runs,delay_mean,delay_std,tp_mean,tp_std,fp_mean,fp_std,fn_mean,fn_std,"
         "accuracy_mean,accuracy_std,alarm_count_mean,alarm_count_std,error\n";
  for (const auto& cell : cells) {
    out << csv_field(cell.stream) << ',' << csv_field(cell.detector) << ',';
    if (!cell.ok()) {
      out << "0,,,,,,,,,,,,," << csv_field(cell.error) << '\n';
      continue;
    }
    const auto& a = cell.aggregate;
    out << a.runs << ',';
    auto pair = [&](const eval::MeanStd& s, int digits) {
      out << fixed(s.mean, digits) << ',' << fixed(s.std, digits) << ',';
    };
    if (cell.scored) {
      pair(a.delay, 4);
      pair(a.tp, 4);
      pair(a.fp, 4);
      pair(a.fn, 4);
    } else {
      out << ",,,,,,,,";
    }
    pair(a.accuracy, 6);
    pair(a.alarms, 4);
    out << '\n';
  }
}

void print_table(std::ostream& out, std::span<const CellResult> cells) {
  std::vector<std::string> order;
  std::map<std::string, std::vector<const CellResult*>> groups;
  for (const auto& cell : cells) {
    if (groups.count(cell.stream) == 0) order.push_back(cell.stream);
    groups[cell.stream].push_back(&cell);
  }

  for (const auto& stream : order) {
    out << "== " << stream << " ==\n";
    out << std::left << std::setw(24) << "Detector" << std::setw(20) << "Delay" << std::setw(16) << "TP"
        << std::setw(16) << "FP" << std::setw(16) << "FN" << std::setw(18) << "Accuracy (%)"
        << "Alarms\n";
    for (const CellResult* cell : groups[stream]) {
      out << std::left << std::setw(24) << cell->detector;
      if (!cell->ok()) {
        out << "error: " << cell->error << '\n';
        continue;
      }
      const auto& a = cell->aggregate;
      if (cell->scored) {
        out << std::setw(20) << pm(a.delay) << std::setw(16) << pm(a.tp) << std::setw(16) << pm(a.fp)
            << std::setw(16) << pm(a.fn);
      } else {
        out << std::setw(20) << "-" << std::setw(16) << "-" << std::setw(16) << "-" << std::setw(16) << "-";
      }
      out << std::setw(18) << pm(a.accuracy, 100.0) << pm(a.alarms) << '\n';
    }
    out << '\n';
  }
}

}  // namespace mddm::experiment
