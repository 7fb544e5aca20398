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

#include "mddm/scoring.hpp"

#include <cmath>

#include "mddm/errors.hpp"

namespace mddm::eval {

namespace {

void require_increasing(std::span<const std::size_t> xs, const char* what) {
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (xs[i] <= xs[i - 1]) {
      throw ContractError(std::string(what) + " must be strictly increasing");
    }
  }
}

}  // namespace

double DriftScore::mean_delay() const noexcept {
  if (delays.empty()) return 0.0;
  double sum = 0.0;
  for (auto d : delays) sum += static_cast<double>(d);
  return sum / static_cast<double>(delays.size());
}

DriftScore score_run(std::span<const std::size_t> alarms, std::span<const std::size_t> drifts,
                     std::size_t accept_delay, double accuracy) {
  if (accept_delay == 0) {
    throw ContractError("acceptable delay must be positive");
  }
  require_increasing(alarms, "alarm positions");
  require_increasing(drifts, "drift positions");
  for (std::size_t i = 1; i < drifts.size(); ++i) {
    if (drifts[i] < drifts[i - 1] + accept_delay) {
      throw ContractError("acceptable-delay regions overlap");
    }
  }

  DriftScore score;
  score.alarm_count = alarms.size();
  score.accuracy = accuracy;
  score.delays.assign(drifts.size(), accept_delay);

  std::vector<bool> detected(drifts.size(), false);
  std::size_t d = 0;
  for (std::size_t alarm : alarms) {
    while (d < drifts.size() && drifts[d] + accept_delay < alarm) ++d;
    const bool inside = d < drifts.size() && alarm > drifts[d] && alarm <= drifts[d] + accept_delay;
    if (!inside) {
      ++score.fp;
    } else if (!detected[d]) {
      detected[d] = true;
      score.delays[d] = alarm - drifts[d];
    }
  }
  for (bool hit : detected) {
    if (hit) {
      ++score.tp;
    } else {
      ++score.fn;
    }
  }
  return score;
}

MeanStd mean_std(std::span<const double> values) {
  if (values.empty()) {
    throw ContractError("mean_std needs at least one value");
  }
  bool constant = true;
  for (double v : values) constant = constant && v == values.front();
  if (constant) return {values.front(), 0.0};

  const double n = static_cast<double>(values.size());
  double sum = 0.0;
  for (double v : values) sum += v;
  const double mean = sum / n;
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return {mean, std::sqrt(ss / (n - 1.0))};
}

AggregateRow aggregate(std::span<const DriftScore> scores) {
  if (scores.empty()) {
    throw ContractError("cannot aggregate zero runs");
  }
  std::vector<double> delay, tp, fp, fn, acc, alarms;
  for (const auto& s : scores) {
    delay.push_back(s.mean_delay());
    tp.push_back(static_cast<double>(s.tp));
    fp.push_back(static_cast<double>(s.fp));
    fn.push_back(static_cast<double>(s.fn));
    acc.push_back(s.accuracy);
    alarms.push_back(static_cast<double>(s.alarm_count));
  }
  AggregateRow row;
  row.runs = scores.size();
  row.delay = mean_std(delay);
  row.tp = mean_std(tp);
  row.fp = mean_std(fp);
  row.fn = mean_std(fn);
  row.accuracy = mean_std(acc);
  row.alarms = mean_std(alarms);
  return row;
}

}  // namespace mddm::eval
