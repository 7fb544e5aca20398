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

#include <set>
#include <vector>

#include "mddm/detector_factory.hpp"
#include "mddm/errors.hpp"
#include "mddm/generators.hpp"
#include "mddm/prequential.hpp"

namespace mddm::learn {
namespace {

using stream::LabeledInstance;
using stream::Schema;

class VectorSource final : public stream::InstanceSource {
 public:
  VectorSource(Schema schema, std::vector<LabeledInstance> xs) : schema_(std::move(schema)), xs_(std::move(xs)) {}
  const Schema& schema() const override { return schema_; }
  std::optional<LabeledInstance> next() override {
    if (i_ >= xs_.size()) return std::nullopt;
    return xs_[i_++];
  }

 private:
  Schema schema_;
  std::vector<LabeledInstance> xs_;
  std::size_t i_ = 0;
};

/// Reports Drift at the listed step numbers (0-based) and records its inputs.
class ScriptedDetector final : public DriftDetector {
 public:
  explicit ScriptedDetector(std::set<std::size_t> fire) : fire_(std::move(fire)) {}
  Verdict step(bool correct) override {
    seen.push_back(correct);
    return fire_.count(seen.size() - 1) ? Verdict::Drift : Verdict::NoChange;
  }
  void reset() override {}
  std::string name() const override { return "scripted"; }

  std::vector<bool> seen;

 private:
  std::set<std::size_t> fire_;
};

Schema one_attribute() {
  Schema s;
  s.attributes.push_back({"x"});
  s.label_values = {"0", "1"};
  return s;
}

/// Label equals x > 0; every instance is easy once both classes are seen.
std::vector<LabeledInstance> threshold_data(std::size_t n) {
  std::vector<LabeledInstance> xs;
  for (std::size_t i = 0; i < n; ++i) {
    const bool pos = i % 2 == 1;
    xs.push_back({i, {pos ? 5.0 : -5.0}, pos ? 1u : 0u});
  }
  return xs;
}

TEST(Policy, ParsesAndDescribes) {
  EXPECT_EQ(AdaptationPolicy::parse("reset").kind, AdaptationPolicy::Kind::ResetOnDrift);
  EXPECT_EQ(AdaptationPolicy::parse("none").kind, AdaptationPolicy::Kind::Ignore);
  const auto blind = AdaptationPolicy::parse("blind:250");
  EXPECT_EQ(blind.kind, AdaptationPolicy::Kind::Blind);
  EXPECT_EQ(blind.period, 250u);
  EXPECT_EQ(blind.describe(), "blind:250");
  EXPECT_EQ(AdaptationPolicy::parse("blind").period, 100u);
  EXPECT_THROW(AdaptationPolicy::parse("blind:0"), ConfigError);
  EXPECT_THROW(AdaptationPolicy::parse("blind:x"), ConfigError);
  EXPECT_THROW(AdaptationPolicy::parse("sometimes"), ConfigError);
}

TEST(Prequential, TestThenTrainAccounting) {
  VectorSource src(one_attribute(), threshold_data(10));
  NaiveBayes nb(src.schema());
  ScriptedDetector det({});
  const auto rec = prequential_run(src, nb, &det, {}, true);
  EXPECT_EQ(rec.processed, 10u);
  // First instance: untrained model, counted as an error. Second: only
  // class 0 known. From the third on every prediction is right.
  EXPECT_EQ(rec.correct, 8u);
  EXPECT_DOUBLE_EQ(rec.accuracy, 0.8);
  EXPECT_EQ(rec.bits, (std::vector<std::uint8_t>{0, 0, 1, 1, 1, 1, 1, 1, 1, 1}));
  EXPECT_EQ(det.seen, (std::vector<bool>{false, false, true, true, true, true, true, true, true, true}));
  EXPECT_TRUE(rec.alarms.empty());
  EXPECT_EQ(nb.total(), 10.0);
}

TEST(Prequential, ResetOnDriftDiscardsModel) {
  VectorSource src(one_attribute(), threshold_data(10));
  NaiveBayes nb(src.schema());
  ScriptedDetector det({5});
  const auto rec = prequential_run(src, nb, &det, {}, true);
  EXPECT_EQ(rec.alarms, (std::vector<std::size_t>{5}));
  // Reset after step 5, then trained on instance 5 (class 1) only, so
  // instance 6 (class 0) is missed and instance 7 is right again.
  EXPECT_EQ(nb.total(), 5.0);
  EXPECT_EQ(rec.bits[6], 0);
  EXPECT_EQ(rec.bits[7], 1);
}

TEST(Prequential, IgnorePolicyKeepsModel) {
  VectorSource src(one_attribute(), threshold_data(10));
  NaiveBayes nb(src.schema());
  ScriptedDetector det({3, 4});
  AdaptationPolicy policy;
  policy.kind = AdaptationPolicy::Kind::Ignore;
  const auto rec = prequential_run(src, nb, &det, policy);
  EXPECT_EQ(rec.alarms, (std::vector<std::size_t>{3, 4}));
  EXPECT_EQ(nb.total(), 10.0);
  EXPECT_EQ(rec.correct, 8u);
}

TEST(Prequential, BlindPolicyResetsPeriodically) {
  VectorSource src(one_attribute(), threshold_data(10));
  NaiveBayes nb(src.schema());
  AdaptationPolicy policy;
  policy.kind = AdaptationPolicy::Kind::Blind;
  policy.period = 4;
  const auto rec = prequential_run(src, nb, nullptr, policy);
  EXPECT_EQ(rec.alarms, (std::vector<std::size_t>{4, 8}));
  EXPECT_EQ(nb.total(), 2.0);
}

TEST(Prequential, NoDetectorIsPlainPrequential) {
  VectorSource src(one_attribute(), threshold_data(6));
  NaiveBayes nb(src.schema());
  const auto rec = prequential_run(src, nb, nullptr);
  EXPECT_EQ(rec.correct, 4u);
  EXPECT_TRUE(rec.alarms.empty());
}

TEST(Prequential, EmptySource) {
  VectorSource src(one_attribute(), {});
  NaiveBayes nb(src.schema());
  const auto rec = prequential_run(src, nb, nullptr);
  EXPECT_EQ(rec.processed, 0u);
  EXPECT_EQ(rec.accuracy, 0.0);
}

TEST(Prequential, AlarmsStrictlyIncreasingOnSyntheticStream) {
  auto spec = stream::default_spec(stream::StreamFamily::Sine1);
  spec.length = 40000;
  spec.schedule.drift_positions = {20000};
  spec.seed = 3;
  stream::SyntheticStream src(spec);
  NaiveBayes nb(src.schema());
  auto det = make_detector(DetectorSpec{});
  const auto rec = prequential_run(src, nb, det.get());
  ASSERT_FALSE(rec.alarms.empty());
  for (std::size_t i = 1; i < rec.alarms.size(); ++i) EXPECT_LT(rec.alarms[i - 1], rec.alarms[i]);
  EXPECT_GT(rec.accuracy, 0.8);
}

}  // namespace
}  // namespace mddm::learn
