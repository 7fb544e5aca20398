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
#include <span>
#include <vector>

#include "mddm/instance.hpp"

namespace mddm::learn {

/// Running mean and variance (Welford).
struct GaussianStats {
  double count = 0.0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) noexcept;
  /// Sample variance; 0 with fewer than two observations.
  double variance() const noexcept;
};

/// Incremental Naive Bayes over nominal and numeric attributes.
///
/// Predicts argmax_c log p(c) + sum_j log p(x_j | c) over the classes seen
/// so far. Nominal likelihoods are Laplace-smoothed counts; numeric ones are
/// Gaussian with a variance floor. Missing values (NaN) are skipped. Ties go
/// to the lowest class code.
class NaiveBayes {
 public:
  static constexpr double kVarianceFloor = 1e-6;

  explicit NaiveBayes(const stream::Schema& schema);

  /// Throws ContractError on an attribute arity mismatch.
  void train(std::span<const double> attributes, std::uint32_t label);
  void train(const stream::LabeledInstance& instance) { train(instance.attributes, instance.label); }

  /// Throws ContractError before the first training instance.
  std::uint32_t predict(std::span<const double> attributes) const;

  /// Unnormalized log posterior of every known class (-inf for classes with
  /// no training instances).
  std::vector<double> log_scores(std::span<const double> attributes) const;

  /// Forget everything learned; the attribute layout is kept.
  void reset();

  bool trained() const noexcept { return total_ > 0.0; }
  std::size_t arity() const noexcept { return kinds_.size(); }
  std::size_t num_classes() const noexcept { return class_counts_.size(); }
  double total() const noexcept { return total_; }
  double class_count(std::uint32_t label) const;
  const GaussianStats& numeric_stats(std::size_t attribute, std::uint32_t label) const;
  double nominal_count(std::size_t attribute, std::uint32_t label, std::size_t value) const;

 private:
  struct ClassStats {
    std::vector<GaussianStats> numeric;
    std::vector<std::vector<double>> nominal;
    std::vector<double> nominal_seen;
  };

  ClassStats& class_stats(std::uint32_t label);
  void check_arity(std::span<const double> attributes) const;

  std::vector<stream::AttributeKind> kinds_;
  std::vector<std::size_t> cardinality_;
  std::vector<double> class_counts_;
  std::vector<ClassStats> stats_;
  double total_ = 0.0;
};

}  // namespace mddm::learn
