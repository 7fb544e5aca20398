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

#include "mddm/weights.hpp"

#include <cmath>
#include <sstream>

#include "mddm/errors.hpp"

namespace mddm {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

void CompensatedSum::add(double x) noexcept {
  const double t = sum_ + x;
  if (std::fabs(sum_) >= std::fabs(x)) {
    carry_ += (sum_ - t) + x;
  } else {
    carry_ += (x - t) + sum_;
  }
  sum_ = t;
}

void validate(const WeightScheme& scheme) {
  std::visit(Overloaded{
                 [](const Arithmetic& a) {
                   if (!(a.d >= 0.0) || !std::isfinite(a.d)) {
                     throw ParameterError("arithmetic scheme requires d >= 0");
                   }
                 },
                 [](const Geometric& g) {
                   if (!(g.r >= 1.0) || !std::isfinite(g.r)) {
                     throw ParameterError("geometric scheme requires r >= 1");
                   }
                 },
                 [](const Euler& e) {
                   if (!(e.lambda >= 0.0) || !std::isfinite(e.lambda)) {
                     throw ParameterError("euler scheme requires lambda >= 0");
                   }
                 },
                 [](const Uniform&) {},
             },
             scheme);
}

std::string describe(const WeightScheme& scheme) {
  std::ostringstream out;
  std::visit(Overloaded{
                 [&](const Arithmetic& a) { out << "arithmetic(d=" << a.d << ")"; },
                 [&](const Geometric& g) { out << "geometric(r=" << g.r << ")"; },
                 [&](const Euler& e) { out << "euler(lambda=" << e.lambda << ")"; },
                 [&](const Uniform&) { out << "uniform"; },
             },
             scheme);
  return out.str();
}

std::vector<double> build_weights(const WeightScheme& scheme, std::size_t n) {
  if (n == 0) {
    throw ParameterError("window size must be at least 1");
  }
  validate(scheme);

  std::vector<double> w(n);
  std::visit(Overloaded{
                 [&](const Arithmetic& a) {
                   for (std::size_t i = 0; i < n; ++i) w[i] = 1.0 + static_cast<double>(i) * a.d;
                 },
                 [&](const Geometric& g) {
                   for (std::size_t i = 0; i < n; ++i) w[i] = std::pow(g.r, static_cast<double>(i));
                 },
                 // r = e^lambda, evaluated through the geometric path so both
                 // parameterizations of the same ratio agree bit for bit.
                 [&](const Euler& e) {
                   const double r = std::exp(e.lambda);
                   for (std::size_t i = 0; i < n; ++i) w[i] = std::pow(r, static_cast<double>(i));
                 },
                 [&](const Uniform&) { std::fill(w.begin(), w.end(), 1.0); },
             },
             scheme);
  return w;
}

double compute_epsilon(std::span<const double> weights, double delta) {
  if (weights.empty()) {
    throw ParameterError("epsilon needs at least one weight");
  }
  if (!(delta > 0.0 && delta < 1.0)) {
    throw ParameterError("confidence delta must lie in (0, 1)");
  }
  CompensatedSum total;
  for (double w : weights) {
    if (!(w > 0.0) || !std::isfinite(w)) {
      throw ParameterError("weights must be positive and finite");
    }
    total.add(w);
  }
  const double sum_w = total.value();
  CompensatedSum sum_v2;
  for (double w : weights) {
    const double v = w / sum_w;
    sum_v2.add(v * v);
  }
  return std::sqrt(sum_v2.value() / 2.0 * std::log(1.0 / delta));
}

}  // namespace mddm
