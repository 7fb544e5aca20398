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

#include "mddm/generators.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>

#include "mddm/errors.hpp"

namespace mddm::stream {

namespace {

constexpr std::array<std::array<std::uint8_t, kLedSegments>, 10> kDigits{{
    {1, 1, 1, 0, 1, 1, 1},  // 0
    {0, 0, 1, 0, 0, 1, 0},  // 1
    {1, 0, 1, 1, 1, 0, 1},  // 2
    {1, 0, 1, 1, 0, 1, 1},  // 3
    {0, 1, 1, 1, 0, 1, 0},  // 4
    {1, 1, 0, 1, 0, 1, 1},  // 5
    {1, 1, 0, 1, 1, 1, 1},  // 6
    {1, 0, 1, 0, 0, 1, 0},  // 7
    {1, 1, 1, 1, 1, 1, 1},  // 8
    {1, 1, 1, 1, 0, 1, 1},  // 9
}};

std::size_t max_concepts(const StreamSpec& spec) {
  switch (spec.family) {
    case StreamFamily::Circles: return kCircles.size();
    case StreamFamily::Led: return spec.led_swaps.size();
    default: return static_cast<std::size_t>(-1);
  }
}

Schema binary_schema(std::vector<Attribute> attributes) {
  Schema s;
  s.attributes = std::move(attributes);
  s.label_values = {"0", "1"};
  return s;
}

Attribute numeric(std::string name) { return {std::move(name), AttributeKind::Numeric, {}}; }
Attribute boolean(std::string name) { return {std::move(name), AttributeKind::Nominal, {"0", "1"}}; }

}  // namespace

std::string_view to_string(StreamFamily family) noexcept {
  switch (family) {
    case StreamFamily::Sine1: return "Sine1";
    case StreamFamily::Mixed: return "Mixed";
    case StreamFamily::Circles: return "Circles";
    case StreamFamily::Led: return "LED";
    case StreamFamily::CsvFile: return "CSV";
  }
  return "unknown";
}

StreamFamily parse_family(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "sine1") return StreamFamily::Sine1;
  if (lower == "mixed") return StreamFamily::Mixed;
  if (lower == "circles") return StreamFamily::Circles;
  if (lower == "led") return StreamFamily::Led;
  if (lower == "csv") return StreamFamily::CsvFile;
  throw ConfigError("unknown stream '" + std::string(name) +
                    "' (valid: sine1, mixed, circles, led, or a path to a .csv file)");
}

StreamSpec default_spec(StreamFamily family) {
  StreamSpec spec;
  spec.family = family;
  switch (family) {
    case StreamFamily::Sine1:
    case StreamFamily::Mixed:
      spec.schedule = {{20000, 40000, 60000, 80000}, 50};
      break;
    case StreamFamily::Circles:
    case StreamFamily::Led:
      spec.schedule = {{25000, 50000, 75000}, 500};
      break;
    case StreamFamily::CsvFile:
      spec.schedule = {{}, 1};
      spec.noise = 0.0;
      break;
  }
  return spec;
}

void validate(const StreamSpec& spec) {
  if (spec.family == StreamFamily::CsvFile) return;
  if (!(spec.noise >= 0.0 && spec.noise < 1.0)) {
    throw ConfigError("noise rate must lie in [0, 1)");
  }
  if (spec.schedule.transition == 0) {
    throw ConfigError("transition length must be at least 1");
  }
  const auto& pos = spec.schedule.drift_positions;
  for (std::size_t i = 0; i < pos.size(); ++i) {
    if (pos[i] >= spec.length) {
      throw ConfigError("drift position " + std::to_string(pos[i]) + " is beyond the stream length " +
                        std::to_string(spec.length));
    }
    if (i > 0 && pos[i] <= pos[i - 1]) {
      throw ConfigError("drift positions must be strictly increasing");
    }
  }
  if (spec.schedule.concepts() > max_concepts(spec)) {
    throw ConfigError(std::string(to_string(spec.family)) + " supports at most " +
                      std::to_string(max_concepts(spec)) + " concepts");
  }
  if (spec.family == StreamFamily::Led) {
    std::size_t used = 0;
    for (std::size_t c = 0; c < spec.led_swaps.size(); ++c) {
      if (spec.led_swaps[c] > kLedSegments) throw ConfigError("LED swap count exceeds 7 segments");
      if (c > 0) used += spec.led_swaps[c];
    }
    if (used > kLedAttributes - kLedSegments) {
      throw ConfigError("LED swaps need more irrelevant attributes than the 17 available");
    }
  }
}

double drift_probability(double t, double t0, double zeta) {
  return 1.0 / (1.0 + std::exp(-4.0 * (t - t0) / zeta));
}

bool sine1_label(double x, double y, std::size_t concept_index) {
  const bool positive = y < std::sin(x);
  return (concept_index % 2 == 0) ? positive : !positive;
}

bool mixed_label(bool v, bool w, double x, double y, std::size_t concept_index) {
  const bool below = y < 0.5 + 0.3 * std::sin(3.0 * std::numbers::pi * x);
  const int hits = static_cast<int>(v) + static_cast<int>(w) + static_cast<int>(below);
  const bool positive = hits >= 2;
  return (concept_index % 2 == 0) ? positive : !positive;
}

bool circles_label(double x, double y, std::size_t concept_index) {
  if (concept_index >= kCircles.size()) {
    throw ConfigError("Circles has only four concepts");
  }
  const Circle& c = kCircles[concept_index];
  const double dx = x - c.cx;
  const double dy = y - c.cy;
  return dx * dx + dy * dy <= c.radius * c.radius;
}

const std::array<std::uint8_t, kLedSegments>& led_segments(std::size_t digit) {
  return kDigits.at(digit);
}

std::array<std::size_t, kLedSegments> led_layout(std::size_t concept_index,
                                                 const std::vector<std::size_t>& swaps) {
  std::array<std::size_t, kLedSegments> layout{};
  for (std::size_t i = 0; i < kLedSegments; ++i) layout[i] = i;
  if (concept_index == 0 || concept_index >= swaps.size()) return layout;

  std::size_t offset = 0;
  for (std::size_t c = 1; c < concept_index; ++c) offset += swaps[c];
  for (std::size_t i = 0; i < swaps[concept_index] && i < kLedSegments; ++i) {
    layout[i] = kLedSegments + offset + i;
  }
  return layout;
}

LabeledInstance led_emit(Rng& rng, std::size_t concept_index, const std::vector<std::size_t>& swaps) {
  LabeledInstance inst;
  inst.attributes.assign(kLedAttributes, 0.0);
  const auto digit = static_cast<std::uint32_t>(rng.below(10));
  const auto layout = led_layout(concept_index, swaps);

  std::array<bool, kLedAttributes> relevant{};
  for (std::size_t s = 0; s < kLedSegments; ++s) {
    inst.attributes[layout[s]] = kDigits[digit][s];
    relevant[layout[s]] = true;
  }
  for (std::size_t a = 0; a < kLedAttributes; ++a) {
    if (!relevant[a]) inst.attributes[a] = static_cast<double>(rng.below(2));
  }
  inst.label = digit;
  inst.clean_label = digit;
  inst.concept_index = static_cast<std::uint32_t>(concept_index);
  return inst;
}

Schema schema_for(StreamFamily family) {
  switch (family) {
    case StreamFamily::Sine1:
    case StreamFamily::Circles:
      return binary_schema({numeric("x"), numeric("y")});
    case StreamFamily::Mixed:
      return binary_schema({boolean("v"), boolean("w"), numeric("x"), numeric("y")});
    case StreamFamily::Led: {
      Schema s;
      for (std::size_t i = 0; i < kLedAttributes; ++i) s.attributes.push_back(boolean("a" + std::to_string(i + 1)));
      for (int d = 0; d < 10; ++d) s.label_values.push_back(std::to_string(d));
      return s;
    }
    case StreamFamily::CsvFile:
      break;
  }
  throw ConfigError("CSV streams have no fixed schema");
}

SyntheticStream::SyntheticStream(StreamSpec spec)
    : spec_(std::move(spec)), schema_(schema_for(spec_.family)), rng_(spec_.seed) {
  validate(spec_);
}

double transition_center(const ConceptSchedule& schedule, std::size_t drift) {
  const double p = static_cast<double>(schedule.drift_positions.at(drift));
  return schedule.anchor == TransitionAnchor::Start ? p + schedule.transition / 2.0 : p;
}

std::size_t SyntheticStream::sample_concept(std::size_t t) {
  const double u = rng_.uniform();
  const auto& schedule = spec_.schedule;
  if (schedule.drift_positions.empty()) return 0;

  // Nearest transition center; ties go to the earlier one.
  const double x = static_cast<double>(t);
  std::size_t nearest = 0;
  double best = std::abs(x - transition_center(schedule, 0));
  for (std::size_t j = 1; j < schedule.drift_positions.size(); ++j) {
    const double dist = std::abs(x - transition_center(schedule, j));
    if (dist < best) {
      best = dist;
      nearest = j;
    }
  }
  const double p = drift_probability(x, transition_center(schedule, nearest), static_cast<double>(schedule.transition));
  return u < p ? nearest + 1 : nearest;
}

void SyntheticStream::draw_binary(std::size_t concept_index, LabeledInstance& inst) {
  switch (spec_.family) {
    case StreamFamily::Sine1: {
      const double x = rng_.uniform();
      const double y = rng_.uniform();
      inst.attributes = {x, y};
      inst.label = sine1_label(x, y, concept_index) ? 1 : 0;
      break;
    }
    case StreamFamily::Mixed: {
      const bool v = rng_.below(2) == 1;
      const bool w = rng_.below(2) == 1;
      const double x = rng_.uniform();
      const double y = rng_.uniform();
      inst.attributes = {v ? 1.0 : 0.0, w ? 1.0 : 0.0, x, y};
      inst.label = mixed_label(v, w, x, y, concept_index) ? 1 : 0;
      break;
    }
    case StreamFamily::Circles: {
      const double x = rng_.uniform();
      const double y = rng_.uniform();
      inst.attributes = {x, y};
      inst.label = circles_label(x, y, concept_index) ? 1 : 0;
      break;
    }
    default:
      throw ContractError("not a binary stream family");
  }
}

std::optional<LabeledInstance> SyntheticStream::next() {
  if (position_ >= spec_.length) return std::nullopt;
  const std::size_t t = position_++;
  const std::size_t concept_index = sample_concept(t);

  LabeledInstance inst;
  if (spec_.family == StreamFamily::Led) {
    inst = led_emit(rng_, concept_index, spec_.led_swaps);
  } else if (spec_.balanced) {
    // Pick the class first, then redraw attributes until they match it.
    const std::uint32_t want = rng_.bernoulli(0.5) ? 1 : 0;
    do {
      draw_binary(concept_index, inst);
    } while (inst.label != want);
  } else {
    draw_binary(concept_index, inst);
  }
  inst.position = t;
  inst.clean_label = inst.label;
  inst.concept_index = static_cast<std::uint32_t>(concept_index);

  if (rng_.bernoulli(spec_.noise)) {
    if (spec_.family == StreamFamily::Led) {
      // Uniform over the nine other digits.
      const auto shift = static_cast<std::uint32_t>(rng_.below(9)) + 1;
      inst.label = (inst.label + shift) % 10;
    } else {
      inst.label = 1 - inst.label;
    }
  }
  return inst;
}

std::vector<LabeledInstance> generate_stream(const StreamSpec& spec) {
  SyntheticStream source(spec);
  std::vector<LabeledInstance> out;
  out.reserve(spec.length);
  while (auto inst = source.next()) out.push_back(std::move(*inst));
  return out;
}

}  // namespace mddm::stream
