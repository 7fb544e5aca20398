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

#include "mddm/naive_bayes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "mddm/errors.hpp"

namespace mddm::learn {

using stream::AttributeKind;

void GaussianStats::add(double x) noexcept {
  count += 1.0;
  const double delta = x - mean;
  mean += delta / count;
  m2 += delta * (x - mean);
}

double GaussianStats::variance() const noexcept {
  return count > 1.0 ? m2 / (count - 1.0) : 0.0;
}

NaiveBayes::NaiveBayes(const stream::Schema& schema) {
  for (const auto& a : schema.attributes) {
    kinds_.push_back(a.kind);
    cardinality_.push_back(a.kind == AttributeKind::Nominal ? a.values.size() : 0);
  }
}

void NaiveBayes::reset() {
  class_counts_.clear();
  stats_.clear();
  total_ = 0.0;
}

void NaiveBayes::check_arity(std::span<const double> attributes) const {
  if (attributes.size() != kinds_.size()) {
    throw ContractError("instance has " + std::to_string(attributes.size()) +
                        " attributes, model expects " + std::to_string(kinds_.size()));
  }
}

NaiveBayes::ClassStats& NaiveBayes::class_stats(std::uint32_t label) {
  if (label >= class_counts_.size()) {
    class_counts_.resize(label + 1, 0.0);
    stats_.resize(label + 1);
  }
  ClassStats& cs = stats_[label];
  if (cs.numeric.empty() && !kinds_.empty()) {
    cs.numeric.resize(kinds_.size());
    cs.nominal.resize(kinds_.size());
    cs.nominal_seen.assign(kinds_.size(), 0.0);
  }
  return cs;
}

void NaiveBayes::train(std::span<const double> attributes, std::uint32_t label) {
  check_arity(attributes);
  ClassStats& cs = class_stats(label);
  class_counts_[label] += 1.0;
  total_ += 1.0;

  for (std::size_t j = 0; j < kinds_.size(); ++j) {
    const double x = attributes[j];
    if (std::isnan(x)) continue;
    if (kinds_[j] == AttributeKind::Numeric) {
      cs.numeric[j].add(x);
    } else {
      const auto code = static_cast<std::size_t>(x);
      auto& counts = cs.nominal[j];
      if (code >= counts.size()) counts.resize(code + 1, 0.0);
      counts[code] += 1.0;
      cs.nominal_seen[j] += 1.0;
      cardinality_[j] = std::max(cardinality_[j], code + 1);
    }
  }
}

std::vector<double> NaiveBayes::log_scores(std::span<const double> attributes) const {
  check_arity(attributes);
  constexpr double kNegInf = -std::numeric_limits<double>::infinity();
  const double log_two_pi = std::log(2.0 * std::numbers::pi);

  std::vector<double> scores(class_counts_.size(), kNegInf);
  for (std::size_t c = 0; c < class_counts_.size(); ++c) {
    if (class_counts_[c] <= 0.0) continue;
    const ClassStats& cs = stats_[c];
    double score = std::log(class_counts_[c] / total_);
    for (std::size_t j = 0; j < kinds_.size(); ++j) {
      const double x = attributes[j];
      if (std::isnan(x)) continue;
      if (kinds_[j] == AttributeKind::Numeric) {
        const GaussianStats& g = cs.numeric[j];
        if (g.count <= 0.0) continue;
        const double var = std::max(g.variance(), kVarianceFloor);
        const double d = x - g.mean;
        score += -0.5 * (log_two_pi + std::log(var)) - d * d / (2.0 * var);
      } else {
        const auto code = static_cast<std::size_t>(x);
        const auto& counts = cs.nominal[j];
        const double count = code < counts.size() ? counts[code] : 0.0;
        const double values = static_cast<double>(std::max(cardinality_[j], code + 1));
        score += std::log((count + 1.0) / (cs.nominal_seen[j] + values));
      }
    }
    scores[c] = score;
  }
  return scores;
}

std::uint32_t NaiveBayes::predict(std::span<const double> attributes) const {
  if (!trained()) {
    throw ContractError("Naive Bayes cannot predict before training");
  }
  const auto scores = log_scores(attributes);
  std::uint32_t best = 0;
  double best_score = -std::numeric_limits<double>::infinity();
  bool found = false;
  for (std::size_t c = 0; c < scores.size(); ++c) {
    if (class_counts_[c] <= 0.0) continue;
    if (!found || scores[c] > best_score) {
      best = static_cast<std::uint32_t>(c);
      best_score = scores[c];
      found = true;
    }
  }
  return best;
}

double NaiveBayes::class_count(std::uint32_t label) const {
  return label < class_counts_.size() ? class_counts_[label] : 0.0;
}

const GaussianStats& NaiveBayes::numeric_stats(std::size_t attribute, std::uint32_t label) const {
  static const GaussianStats kEmpty{};
  if (label >= stats_.size() || stats_[label].numeric.empty()) return kEmpty;
  return stats_[label].numeric.at(attribute);
}

double NaiveBayes::nominal_count(std::size_t attribute, std::uint32_t label, std::size_t value) const {
  if (label >= stats_.size() || stats_[label].nominal.empty()) return 0.0;
  const auto& counts = stats_[label].nominal.at(attribute);
  return value < counts.size() ? counts[value] : 0.0;
}

}  // namespace mddm::learn
