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

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mddm/instance.hpp"
#include "mddm/random.hpp"

namespace mddm::stream {

enum class StreamFamily : std::uint8_t { Sine1, Mixed, Circles, Led, CsvFile };

std::string_view to_string(StreamFamily family) noexcept;

/// Case-insensitive; accepts "sine1", "mixed", "circles", "led", "csv".
/// Throws ConfigError for anything else.
StreamFamily parse_family(std::string_view name);

/// Where a drift position sits within its sigmoid transition.
enum class TransitionAnchor : std::uint8_t {
  Start,   // the transition begins at the drift position (sigmoid centered at p + zeta / 2)
  Center,  // the sigmoid is centered on the drift position
};

/// Drift positions and the sigmoid transition width zeta.
struct ConceptSchedule {
  std::vector<std::size_t> drift_positions;
  std::size_t transition = 50;
  TransitionAnchor anchor = TransitionAnchor::Start;

  std::size_t concepts() const noexcept { return drift_positions.size() + 1; }
};

struct StreamSpec {
  StreamFamily family = StreamFamily::Sine1;
  std::size_t length = 100000;
  double noise = 0.10;
  ConceptSchedule schedule;
  std::uint64_t seed = 1;
  // Binary families only: draw each class with probability 1/2, then redraw
  // attributes until they carry that class.
  bool balanced = true;
  // Relevant/irrelevant attribute swaps per LED concept.
  std::vector<std::size_t> led_swaps = {0, 3, 1, 3};
  std::string csv_path;
};

/// Experiment defaults: 100000 instances, 10% class noise; drifts every
/// 20000 instances with zeta = 50 (Sine1, Mixed) or every 25000 with
/// zeta = 500 (Circles, LED).
StreamSpec default_spec(StreamFamily family);

/// Throws ConfigError for an invalid spec (unsorted or out-of-range drift
/// positions, noise outside [0, 1), too many concepts for the family).
void validate(const StreamSpec& spec);

/// Probability that instance t belongs to the concept after the drift at t0:
/// 1 / (1 + exp(-4 (t - t0) / zeta)).
double drift_probability(double t, double t0, double zeta);

/// Midpoint of drift `drift`'s sigmoid under the schedule's anchor.
double transition_center(const ConceptSchedule& schedule, std::size_t drift);

/// Positive (true) iff y < sin(x); reversed on odd concepts.
bool sine1_label(double x, double y, std::size_t concept_index);

/// Positive iff at least two of {v, w, y < 0.5 + 0.3 sin(3 pi x)} hold;
/// reversed on odd concepts.
bool mixed_label(bool v, bool w, double x, double y, std::size_t concept_index);

struct Circle {
  double cx;
  double cy;
  double radius;
};

inline constexpr std::array<Circle, 4> kCircles{{
    {0.2, 0.5, 0.15},
    {0.4, 0.5, 0.20},
    {0.6, 0.5, 0.25},
    {0.8, 0.5, 0.30},
}};

/// Positive iff (x, y) lies inside or on the concept's circle. Throws
/// ConfigError for concept >= 4.
bool circles_label(double x, double y, std::size_t concept_index);

inline constexpr std::size_t kLedAttributes = 24;
inline constexpr std::size_t kLedSegments = 7;

/// Seven-segment pattern (a..g) of a decimal digit.
const std::array<std::uint8_t, kLedSegments>& led_segments(std::size_t digit);

/// Attribute position of each segment under `concept_index`. Concept c swaps
/// its first swaps[c] segments with irrelevant attributes; each concept
/// uses a fresh block of irrelevant positions, starting at attribute 7.
std::array<std::size_t, kLedSegments> led_layout(std::size_t concept_index,
                                                 const std::vector<std::size_t>& swaps);

/// Draws one noiseless LED instance for `concept_index`: a uniform digit, its
/// segments at the concept's positions and random bits elsewhere.
LabeledInstance led_emit(Rng& rng, std::size_t concept_index, const std::vector<std::size_t>& swaps);

/// Attribute layout and label vocabulary for a synthetic family.
Schema schema_for(StreamFamily family);

/// Deterministic generator for a synthetic spec. At each position the
/// active concept is drawn with drift_probability around the nearest
/// transition center; then the label is flipped with probability spec.noise (to another
/// digit, uniformly, for LED).
class SyntheticStream final : public InstanceSource {
 public:
  explicit SyntheticStream(StreamSpec spec);

  const Schema& schema() const override { return schema_; }
  std::optional<LabeledInstance> next() override;

  const StreamSpec& spec() const noexcept { return spec_; }

 private:
  std::size_t sample_concept(std::size_t t);
  void draw_binary(std::size_t concept_index, LabeledInstance& inst);

  StreamSpec spec_;
  Schema schema_;
  Rng rng_;
  std::size_t position_ = 0;
};

std::vector<LabeledInstance> generate_stream(const StreamSpec& spec);

}  // namespace mddm::stream
