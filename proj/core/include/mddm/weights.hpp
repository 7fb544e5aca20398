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

#include <span>
#include <string>
#include <variant>
#include <vector>

namespace mddm {

/// w_i = 1 + (i - 1) d
struct Arithmetic {
  double d = 0.01;
  bool operator==(const Arithmetic&) const = default;
};

/// w_i = r^(i - 1)
struct Geometric {
  double r = 1.01;
  bool operator==(const Geometric&) const = default;
};

/// w_i = e^(lambda (i - 1)); a geometric scheme with r = e^lambda.
struct Euler {
  double lambda = 0.01;
  bool operator==(const Euler&) const = default;
};

/// w_i = 1
struct Uniform {
  bool operator==(const Uniform&) const = default;
};

/// Weighting of the sliding-window slots. Slot 1 is the oldest entry (the
/// tail), slot n the newest (the head); every scheme gives w_1 = 1 and
/// non-decreasing weights toward the head.
using WeightScheme = std::variant<Arithmetic, Geometric, Euler, Uniform>;

/// Throws ParameterError if the scheme's parameter is outside its domain.
void validate(const WeightScheme& scheme);

std::string describe(const WeightScheme& scheme);

/// Weights w_1..w_n for `scheme`, oldest slot first.
std::vector<double> build_weights(const WeightScheme& scheme, std::size_t n);

/// McDiarmid bound sqrt(sum(v_i^2) / 2 * ln(1 / delta)) with v_i the
/// normalized weights. Throws ParameterError for an empty or non-positive
/// weight vector, or delta outside (0, 1).
double compute_epsilon(std::span<const double> weights, double delta);

/// Neumaier-compensated sum.
class CompensatedSum {
 public:
  void add(double x) noexcept;
  double value() const noexcept { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

}  // namespace mddm
