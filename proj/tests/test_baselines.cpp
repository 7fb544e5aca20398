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

#include <gtest/gtest.h>

#include <cmath>
#include <memory>
#include <random>
#include <vector>

#include "mddm/baseline/adwin.hpp"
#include "mddm/baseline/cusum.hpp"
#include "mddm/baseline/ddm.hpp"
#include "mddm/baseline/eddm.hpp"
#include "mddm/baseline/page_hinkley.hpp"
#include "mddm/baseline/rddm.hpp"
#include "mddm/detector_factory.hpp"
#include "mddm/errors.hpp"
#include "oracles.hpp"

namespace mddm::baseline {
namespace {

// `correct` bits with accuracy alternating between 0.85 and `low` every
// `period` steps.
std::vector<bool> regime_bits(std::size_t count, double low, std::size_t period, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<bool> bits(count);
  for (std::size_t i = 0; i < count; ++i) bits[i] = u(gen) < ((i / period) % 2 == 0 ? 0.85 : low);
  return bits;
}

template <class D>
std::vector<Verdict> run(D& det, const std::vector<bool>& bits) {
  std::vector<Verdict> out;
  for (bool b : bits) out.push_back(det.step(b));
  return out;
}

// First 1-based step with a Drift verdict, 0 if none.
template <class D>
std::size_t first_drift(D& det, const std::vector<bool>& bits) {
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (det.step(bits[i]) == Verdict::Drift) return i + 1;
  }
  return 0;
}

std::vector<bool> errors_then(std::size_t correct, std::size_t wrong) {
  std::vector<bool> bits(correct, true);
  bits.insert(bits.end(), wrong, false);
  return bits;
}

// ---- CUSUM ---------------------------------------------------------------

// g_t = max(0, g + x - [mean] - delta), alarm when g > lambda after the gate.
std::vector<Verdict> cusum_oracle(const std::vector<bool>& bits, const CusumConfig& c) {
  std::vector<Verdict> out;
  double g = 0.0, sum = 0.0;
  std::size_t t = 0;
  for (bool b : bits) {
    const double x = b ? 0.0 : 1.0;
    ++t;
    sum += x;
    const double signal = c.subtract_mean ? x - sum / static_cast<double>(t) : x;
    g = std::max(0.0, g + signal - c.delta);
    if (t >= c.min_instances && g > c.threshold) {
      out.push_back(Verdict::Drift);
      g = 0.0;
      sum = 0.0;
      t = 0;
    } else {
      out.push_back(Verdict::NoChange);
    }
  }
  return out;
}

TEST(Cusum, ConstantErrorsAlarmAtFiftyOne) {
  CusumConfig c;
  c.subtract_mean = false;
  Cusum det(c);
  EXPECT_EQ(first_drift(det, std::vector<bool>(200, false)), 51u);
  EXPECT_EQ(static_cast<std::size_t>(std::ceil(50.0 / 0.995)), 51u);
}

TEST(Cusum, AllCorrectNeverAlarms) {
  for (bool center : {true, false}) {
    CusumConfig c;
    c.subtract_mean = center;
    Cusum det(c);
    for (int i = 0; i < 100000; ++i) ASSERT_EQ(det.step(true), Verdict::NoChange);
    EXPECT_EQ(det.statistic(), 0.0);
  }
}

TEST(Cusum, StatisticNeverNegative) {
  Cusum det;
  for (bool b : regime_bits(20000, 0.4, 3000, 1)) {
    det.step(b);
    ASSERT_GE(det.statistic(), 0.0);
  }
}

TEST(Cusum, MatchesOracle) {
  for (bool center : {true, false}) {
    CusumConfig c;
    c.subtract_mean = center;
    c.threshold = center ? 50.0 : 500.0;
    const auto bits = regime_bits(60000, 0.3, 5000, 2);
    Cusum det(c);
    EXPECT_EQ(run(det, bits), cusum_oracle(bits, c)) << "center=" << center;
  }
}

TEST(Cusum, ResetsAfterDrift) {
  CusumConfig c;
  c.subtract_mean = false;
  Cusum det(c);
  const Cusum fresh(c);
  while (det.step(false) != Verdict::Drift) {
  }
  EXPECT_EQ(det, fresh);
}

// ---- Page-Hinkley --------------------------------------------------------

// m_T = sum_t (x_t - mean(x_1..x_t) - delta), recomputed from scratch.
std::size_t page_hinkley_oracle(const std::vector<bool>& bits, const PageHinkleyConfig& c) {
  std::vector<double> xs;
  for (std::size_t T = 1; T <= bits.size(); ++T) {
    xs.push_back(bits[T - 1] ? 0.0 : 1.0);
    double m = 0.0, lowest = INFINITY, sum = 0.0;
    for (std::size_t t = 1; t <= T; ++t) {
      sum += xs[t - 1];
      m += xs[t - 1] - sum / static_cast<double>(t) - c.delta;
      lowest = std::min(lowest, m);
    }
    if (T >= c.min_instances && m - lowest > c.threshold) return T;
  }
  return 0;
}

TEST(PageHinkley, ConstantStreamNeverAlarms) {
  for (bool value : {true, false}) {
    PageHinkley det;
    for (int i = 0; i < 50000; ++i) ASSERT_EQ(det.step(value), Verdict::NoChange);
    EXPECT_LE(det.minimum(), det.cumulative());
  }
}

TEST(PageHinkley, ChangeAfterThousandCorrectMatchesOracle) {
  const auto bits = errors_then(1000, 400);
  PageHinkley det;
  const std::size_t expected = page_hinkley_oracle(bits, PageHinkleyConfig{});
  ASSERT_GT(expected, 1000u);
  EXPECT_EQ(first_drift(det, bits), expected);
}

TEST(PageHinkley, MinimumMonotone) {
  PageHinkley det;
  double last = INFINITY;
  for (bool b : regime_bits(20000, 0.5, 4000, 3)) {
    if (det.step(b) == Verdict::Drift) {
      last = INFINITY;
      continue;
    }
    EXPECT_LE(det.minimum(), last);
    EXPECT_LE(det.minimum(), det.cumulative());
    last = det.minimum();
  }
}

// ---- DDM -----------------------------------------------------------------

std::vector<Verdict> ddm_oracle(const std::vector<bool>& bits, const DdmConfig& c) {
  std::vector<Verdict> out;
  double errors = 0.0, t = 0.0, pmin = INFINITY, smin = INFINITY;
  for (bool b : bits) {
    t += 1.0;
    errors += b ? 0.0 : 1.0;
    const double p = errors / t;
    const double s = std::sqrt(p * (1.0 - p) / t);
    if (t < static_cast<double>(c.min_instances)) {
      out.push_back(Verdict::NoChange);
      continue;
    }
    if (p + s < pmin + smin) {
      pmin = p;
      smin = s;
    }
    if (p + s > pmin + c.drift_level * smin) {
      out.push_back(Verdict::Drift);
      errors = t = 0.0;
      pmin = smin = INFINITY;
    } else if (p + s > pmin + c.warning_level * smin) {
      out.push_back(Verdict::Warning);
    } else {
      out.push_back(Verdict::NoChange);
    }
  }
  return out;
}

TEST(Ddm, ImprovingClassifierNeverDrifts) {
  std::vector<bool> bits(200, false);
  bits.insert(bits.end(), 50000, true);
  Ddm det;
  for (Verdict v : run(det, bits)) EXPECT_NE(v, Verdict::Drift);
}

TEST(Ddm, AlternatingThenAllErrorsMatchesOracle) {
  std::vector<bool> bits;
  for (int i = 0; i < 1000; ++i) bits.push_back(i % 2 == 0);
  bits.insert(bits.end(), 500, false);
  Ddm det;
  const auto expected = ddm_oracle(bits, DdmConfig{});
  EXPECT_EQ(run(det, bits), expected);
  std::size_t first = 0;
  for (std::size_t i = 0; i < expected.size() && first == 0; ++i) {
    if (expected[i] == Verdict::Drift) first = i + 1;
  }
  EXPECT_GT(first, 1000u);
  EXPECT_LT(first, 1100u);
}

TEST(Ddm, MatchesOracleOnRegimes) {
  const auto bits = regime_bits(80000, 0.55, 6000, 4);
  Ddm det;
  EXPECT_EQ(run(det, bits), ddm_oracle(bits, DdmConfig{}));
}

TEST(Ddm, ResetsAfterDrift) {
  Ddm det;
  const Ddm fresh;
  for (int i = 0; i < 1000; ++i) det.step(i % 10 != 0);
  while (det.step(false) != Verdict::Drift) {
  }
  EXPECT_EQ(det, fresh);
}

// ---- EDDM ----------------------------------------------------------------

std::vector<Verdict> eddm_oracle(const std::vector<bool>& bits, const EddmConfig& c) {
  std::vector<Verdict> out;
  std::vector<double> distances;
  std::size_t t = 0, last = 0;
  double max_m2s = 0.0;
  for (bool b : bits) {
    ++t;
    if (b) {
      out.push_back(Verdict::NoChange);
      continue;
    }
    distances.push_back(static_cast<double>(t - last));
    last = t;
    double mean = 0.0;
    for (double d : distances) mean += d;
    mean /= static_cast<double>(distances.size());
    double var = 0.0;
    for (double d : distances) var += (d - mean) * (d - mean);
    var /= static_cast<double>(distances.size());
    const double m2s = mean + 2.0 * std::sqrt(var);
    if (m2s > max_m2s) {
      max_m2s = m2s;
      out.push_back(Verdict::NoChange);
    } else if (distances.size() < c.min_errors) {
      out.push_back(Verdict::NoChange);
    } else if (m2s / max_m2s < c.drift_ratio) {
      out.push_back(Verdict::Drift);
      distances.clear();
      t = last = 0;
      max_m2s = 0.0;
    } else if (m2s / max_m2s < c.warning_ratio) {
      out.push_back(Verdict::Warning);
    } else {
      out.push_back(Verdict::NoChange);
    }
  }
  return out;
}

TEST(Eddm, IncreasingSpacingNeverDrifts) {
  std::vector<bool> bits;
  for (std::size_t gap = 1; gap < 300; ++gap) {
    bits.insert(bits.end(), gap, true);
    bits.push_back(false);
  }
  Eddm det;
  for (Verdict v : run(det, bits)) EXPECT_NE(v, Verdict::Drift);
}

TEST(Eddm, WideThenNarrowSpacingMatchesOracle) {
  std::vector<bool> bits;
  for (int e = 0; e < 50; ++e) {
    bits.insert(bits.end(), 99, true);
    bits.push_back(false);
  }
  for (int e = 0; e < 200; ++e) {
    bits.push_back(true);
    bits.push_back(false);
  }
  Eddm det;
  const auto expected = eddm_oracle(bits, EddmConfig{});
  EXPECT_EQ(run(det, bits), expected);
  std::size_t first = 0;
  for (std::size_t i = 0; i < expected.size() && first == 0; ++i) {
    if (expected[i] == Verdict::Drift) first = i + 1;
  }
  EXPECT_GT(first, 5000u);
}

TEST(Eddm, MatchesOracleOnRegimes) {
  const auto bits = regime_bits(30000, 0.5, 5000, 5);
  Eddm det;
  EXPECT_EQ(run(det, bits), eddm_oracle(bits, EddmConfig{}));
}

TEST(Eddm, ResetsAfterDrift) {
  std::vector<bool> bits;
  for (int e = 0; e < 50; ++e) {
    bits.insert(bits.end(), 99, true);
    bits.push_back(false);
  }
  bits.insert(bits.end(), 500, false);
  Eddm det;
  const Eddm fresh;
  ASSERT_GT(first_drift(det, bits), 0u);
  EXPECT_EQ(det, fresh);
}

// ---- RDDM ----------------------------------------------------------------

TEST(Rddm, AllCorrectNeverWarnsOrDrifts) {
  Rddm det;
  for (int i = 0; i < 100000; ++i) ASSERT_EQ(det.step(true), Verdict::NoChange);
}

TEST(Rddm, LongStableConceptForcesDriftAfterMax) {
  Rddm det;
  std::size_t first = 0;
  for (std::size_t i = 1; i <= 45000 && first == 0; ++i) {
    const Verdict v = det.step(i % 10 != 0);
    if (v == Verdict::Drift) first = i;
  }
  EXPECT_EQ(first, 40001u);
  // The rebuilt statistics cover only the retained segment.
  EXPECT_EQ(det.count(), 7000u);
}

TEST(Rddm, DetectsErrorJump) {
  Rddm det;
  const auto bits = errors_then(5000, 2000);
  std::vector<bool> noisy = bits;
  for (std::size_t i = 0; i < 5000; i += 10) noisy[i] = false;
  const std::size_t first = first_drift(det, noisy);
  EXPECT_GT(first, 5000u);
  EXPECT_LT(first, 5100u);
}

TEST(Rddm, ReactsFasterThanDdmOnSecondChange) {
  const auto bits = regime_bits(60000, 0.45, 10000, 6);
  Rddm rddm;
  Ddm ddm;
  std::size_t rddm_alarms = 0, ddm_alarms = 0;
  for (bool b : bits) {
    rddm_alarms += rddm.step(b) == Verdict::Drift ? 1 : 0;
    ddm_alarms += ddm.step(b) == Verdict::Drift ? 1 : 0;
  }
  EXPECT_GE(rddm_alarms, 3u);
  EXPECT_GE(rddm_alarms, ddm_alarms);
}

TEST(Rddm, WarningZoneLimitForcesDrift) {
  RddmConfig c;
  c.warn_limit = 50;
  c.drift_level = 100.0;  // statistical drift out of reach
  Rddm det(c);
  std::size_t first = 0;
  std::size_t i = 0;
  for (; i < 3000; ++i) det.step(i % 10 != 0);
  for (; i < 6000 && first == 0; ++i) {
    if (det.step(i % 2 == 0) == Verdict::Drift) first = i;
  }
  EXPECT_GT(first, 3000u);
  EXPECT_LT(first, 3200u);
}

// ---- ADWIN ---------------------------------------------------------------

TEST(Adwin, IdenticalBitsNeverDrift) {
  for (bool value : {true, false}) {
    Adwin det;
    for (int i = 0; i < 40000; ++i) ASSERT_EQ(det.step(value), Verdict::NoChange);
    EXPECT_EQ(det.width(), 32768u);
  }
}

TEST(Adwin, StepChangeMatchesBruteForce) {
  const auto bits = errors_then(2000, 2000);
  Adwin det;
  oracle::AdwinModel ref(0.002, 5, 32768);
  std::size_t first = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    const Verdict v = det.step(bits[i]);
    ASSERT_EQ(v, ref.step(bits[i])) << "step " << i + 1;
    ASSERT_EQ(det.window(), ref.window()) << "step " << i + 1;
    if (v == Verdict::Drift && first == 0) first = i + 1;
  }
  EXPECT_GT(first, 2000u);
  EXPECT_LT(first, 2030u);
}

TEST(Adwin, MatchesBruteForceOnRandomStreams) {
  for (double delta : {0.002, 0.1, 0.6}) {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      const auto bits = regime_bits(3000, 0.5, 400, seed);
      AdwinConfig c;
      c.delta = delta;
      c.max_window = 700;
      Adwin det(c);
      oracle::AdwinModel ref(delta, 5, 700);
      for (std::size_t i = 0; i < bits.size(); ++i) {
        ASSERT_EQ(det.step(bits[i]), ref.step(bits[i])) << "delta=" << delta << " step " << i + 1;
        ASSERT_EQ(det.window(), ref.window());
      }
    }
  }
}

TEST(Adwin, NoSignificantCutAfterStep) {
  AdwinConfig c;
  c.max_window = 500;
  c.delta = 0.3;
  Adwin det(c);
  for (bool b : regime_bits(5000, 0.2, 300, 7)) {
    det.step(b);
    ASSERT_FALSE(oracle::adwin_has_cut(det.window(), c.delta, c.min_sub_window));
    ASSERT_FALSE(det.find_cut().has_value());
  }
}

TEST(Adwin, ImprovementShrinksSilently) {
  const auto bits = errors_then(0, 2000);
  std::vector<bool> better = bits;
  better.insert(better.end(), 2000, true);
  Adwin det;
  std::size_t drifts = 0;
  for (bool b : better) drifts += det.step(b) == Verdict::Drift ? 1 : 0;
  EXPECT_EQ(drifts, 0u);
  EXPECT_LT(det.width(), 4000u);
}

TEST(Adwin, RejectsBadConfig) {
  AdwinConfig c;
  c.delta = 0.0;
  EXPECT_THROW(Adwin{c}, ParameterError);
  c.delta = 0.1;
  c.max_window = 8;
  EXPECT_THROW(Adwin{c}, ParameterError);
}

// ---- Shared properties ---------------------------------------------------

TEST(Baselines, NoAlarmOnAllCorrectStream) {
  for (const auto& name : detector_names()) {
    if (name == "none") continue;
    DetectorSpec spec;
    spec.name = name;
    auto det = make_detector(spec);
    for (int i = 0; i < 100000; ++i) ASSERT_EQ(det->step(true), Verdict::NoChange) << name << " step " << i;
  }
}

TEST(Baselines, DeterministicVerdicts) {
  const auto bits = regime_bits(40000, 0.4, 7000, 8);
  for (const auto& name : detector_names()) {
    if (name == "none") continue;
    DetectorSpec spec;
    spec.name = name;
    auto a = make_detector(spec);
    auto b = make_detector(spec);
    EXPECT_EQ(run(*a, bits), run(*b, bits)) << name;
  }
}

TEST(Baselines, RejectBadParameters) {
  EXPECT_THROW(Cusum(CusumConfig{0.005, 0.0}), ParameterError);
  EXPECT_THROW(PageHinkley(PageHinkleyConfig{0.005, -1.0}), ParameterError);
  EXPECT_THROW(Ddm(DdmConfig{30, 3.0, 2.0}), ParameterError);
  EXPECT_THROW(Eddm(EddmConfig{0.9, 0.95}), ParameterError);
  RddmConfig r;
  r.min_stable = 0;
  EXPECT_THROW(Rddm{r}, ParameterError);
}

}  // namespace
}  // namespace mddm::baseline
