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

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <vector>

#include "mddm/errors.hpp"
#include "mddm/scoring.hpp"
#include "oracles.hpp"

namespace mddm::eval {
namespace {

using V = std::vector<std::size_t>;

TEST(ScoreRun, AlarmInsideRegion) {
  const auto s = score_run(V{20100}, V{20000}, 250);
  EXPECT_EQ(s.tp, 1u);
  EXPECT_EQ(s.fp, 0u);
  EXPECT_EQ(s.fn, 0u);
  EXPECT_EQ(s.delays, V{100});
}

TEST(ScoreRun, LateAlarmIsMissAndFalseAlarm) {
  const auto s = score_run(V{20300}, V{20000}, 250);
  EXPECT_EQ(s.tp, 0u);
  EXPECT_EQ(s.fn, 1u);
  EXPECT_EQ(s.fp, 1u);
  EXPECT_EQ(s.delays, V{250});
}

TEST(ScoreRun, OnlyFirstAlarmInRegionCounts) {
  const auto s = score_run(V{20050, 20110}, V{20000}, 250);
  EXPECT_EQ(s.tp, 1u);
  EXPECT_EQ(s.fp, 0u);
  EXPECT_EQ(s.delays, V{50});
  EXPECT_EQ(s.alarm_count, 2u);
}

TEST(ScoreRun, RegionBoundaries) {
  EXPECT_EQ(score_run(V{1000}, V{1000}, 10).fp, 1u);
  EXPECT_EQ(score_run(V{1010}, V{1000}, 10).tp, 1u);
  EXPECT_EQ(score_run(V{1011}, V{1000}, 10).fp, 1u);
}

TEST(ScoreRun, NoAlarms) {
  const auto s = score_run(V{}, V{100, 200, 300}, 50);
  EXPECT_EQ(s.tp, 0u);
  EXPECT_EQ(s.fn, 3u);
  EXPECT_EQ(s.fp, 0u);
  EXPECT_DOUBLE_EQ(s.mean_delay(), 50.0);
}

TEST(ScoreRun, NoDrifts) {
  const auto s = score_run(V{5, 9}, V{}, 50, 0.7);
  EXPECT_EQ(s.fp, 2u);
  EXPECT_EQ(s.mean_delay(), 0.0);
  EXPECT_EQ(s.accuracy, 0.7);
}

TEST(ScoreRun, ContractErrors) {
  EXPECT_THROW(score_run(V{5, 5}, V{1}, 10), ContractError);
  EXPECT_THROW(score_run(V{9, 5}, V{1}, 10), ContractError);
  EXPECT_THROW(score_run(V{}, V{3, 2}, 10), ContractError);
  EXPECT_THROW(score_run(V{}, V{1}, 0), ContractError);
  EXPECT_THROW(score_run(V{}, V{10, 15}, 10), ContractError);
}

TEST(ScoreRun, ExtraOutsideAlarmOnlyAddsFalsePositive) {
  const V drifts{100, 300};
  const auto base = score_run(V{120, 350}, drifts, 100);
  const auto more = score_run(V{50, 120, 350}, drifts, 100);
  EXPECT_EQ(more.fp, base.fp + 1);
  EXPECT_EQ(more.tp, base.tp);
  EXPECT_EQ(more.fn, base.fn);
  EXPECT_EQ(more.delays, base.delays);
}

TEST(ScoreRun, MatchesRegionMembershipOracle) {
  std::mt19937_64 gen(17);
  for (int trial = 0; trial < 10000; ++trial) {
    const std::size_t accept = 1 + gen() % 20;
    const std::size_t nd = gen() % 6;
    V drifts;
    std::size_t pos = gen() % 10;
    for (std::size_t i = 0; i < nd; ++i) {
      drifts.push_back(pos);
      pos += accept + gen() % 30;
    }
    std::set<std::size_t> picked;
    const std::size_t span = pos + accept + 10;
    const std::size_t na = std::min<std::size_t>(gen() % 21, span);
    while (picked.size() < na) picked.insert(gen() % span);
    const V alarms(picked.begin(), picked.end());

    const auto got = score_run(alarms, drifts, accept);
    const auto want = oracle::score(alarms, drifts, accept);
    ASSERT_EQ(got.tp, want.tp) << "trial " << trial;
    ASSERT_EQ(got.fp, want.fp) << "trial " << trial;
    ASSERT_EQ(got.fn, want.fn) << "trial " << trial;
    ASSERT_EQ(got.delays, want.delays) << "trial " << trial;
    ASSERT_EQ(got.tp + got.fn, drifts.size());
  }
}

TEST(MeanStd, SampleStandardDeviation) {
  const std::vector<double> two{100.0, 200.0};
  const auto ms = mean_std(two);
  EXPECT_DOUBLE_EQ(ms.mean, 150.0);
  EXPECT_NEAR(ms.std, 70.71067811865476, 1e-9);

  const std::vector<double> one{3.5};
  EXPECT_EQ(mean_std(one).std, 0.0);
  const std::vector<double> same(100, 0.1);
  EXPECT_EQ(mean_std(same).std, 0.0);
  EXPECT_EQ(mean_std(same).mean, 0.1);
  EXPECT_THROW(mean_std(std::vector<double>{}), ContractError);
}

TEST(Aggregate, UsesPerRunMeanDelay) {
  std::vector<DriftScore> runs(2);
  runs[0].delays = {100, 300};
  runs[0].tp = 2;
  runs[0].accuracy = 0.8;
  runs[1].delays = {200, 200};
  runs[1].tp = 1;
  runs[1].fn = 1;
  runs[1].fp = 4;
  runs[1].accuracy = 0.9;
  const auto row = aggregate(runs);
  EXPECT_EQ(row.runs, 2u);
  EXPECT_DOUBLE_EQ(row.delay.mean, 200.0);
  EXPECT_EQ(row.delay.std, 0.0);
  EXPECT_DOUBLE_EQ(row.tp.mean, 1.5);
  EXPECT_DOUBLE_EQ(row.fp.mean, 2.0);
  EXPECT_NEAR(row.fp.std, std::sqrt(8.0), 1e-12);
  EXPECT_NEAR(row.accuracy.mean, 0.85, 1e-12);
  EXPECT_THROW(aggregate(std::vector<DriftScore>{}), ContractError);
}

}  // namespace
}  // namespace mddm::eval
