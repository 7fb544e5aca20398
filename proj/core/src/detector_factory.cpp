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

#include "mddm/detector_factory.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>

#include "mddm/baseline/adwin.hpp"
#include "mddm/baseline/cusum.hpp"
#include "mddm/baseline/ddm.hpp"
#include "mddm/baseline/eddm.hpp"
#include "mddm/baseline/page_hinkley.hpp"
#include "mddm/baseline/rddm.hpp"
#include "mddm/errors.hpp"
#include "mddm/mcdiarmid.hpp"

namespace mddm {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::string join(const std::vector<std::string>& xs) {
  std::string out;
  for (const auto& x : xs) {
    if (!out.empty()) out += ", ";
    out += x;
  }
  return out;
}

const std::map<std::string, std::vector<std::string>>& parameter_table() {
  static const std::map<std::string, std::vector<std::string>> table{
      {"mddm-a", {"n", "delta", "d"}},
      {"mddm-g", {"n", "delta", "r"}},
      {"mddm-e", {"n", "delta", "lambda"}},
      {"fhddm", {"n", "delta"}},
      {"cusum", {"delta", "lambda", "min_instances", "center"}},
      {"page-hinkley", {"delta", "lambda", "min_instances"}},
      {"ddm", {"min_instances", "warning", "drift"}},
      {"eddm", {"alpha", "beta", "min_errors"}},
      {"rddm", {"warning", "drift", "max", "min", "warn_limit", "min_instances"}},
      {"adwin", {"delta", "max_window", "min_sub_window"}},
      {"none", {}},
  };
  return table;
}

// Reads typed overrides out of a DetectorSpec.
class Params {
 public:
  Params(const DetectorSpec& spec, const std::string& key) : spec_(spec), key_(key) {
    const auto& allowed = detector_parameters(key);
    for (const auto& [k, v] : spec.params) {
      if (std::find(allowed.begin(), allowed.end(), k) == allowed.end()) {
        throw ConfigError("detector '" + key + "' has no parameter '" + k + "' (valid: " +
                          (allowed.empty() ? std::string("none") : join(allowed)) + ")");
      }
    }
  }

  // `use_flag` lets the shared --delta value stand in for "delta"; CUSUM and
  // Page-Hinkley use the name for a change magnitude instead.
  double real(const std::string& name, double fallback, bool use_flag = true) const {
    if (use_flag && name == "delta" && spec_.delta && spec_.params.count("delta") == 0) return *spec_.delta;
    auto it = spec_.params.find(name);
    if (it == spec_.params.end()) return fallback;
    double v = 0.0;
    const auto& s = it->second;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
      throw ConfigError("parameter '" + name + "' of '" + key_ + "' is not a number: '" + s + "'");
    }
    return v;
  }

  std::size_t count(const std::string& name, std::size_t fallback) const {
    if (name == "n" && spec_.window_size && spec_.params.count("n") == 0) return *spec_.window_size;
    auto it = spec_.params.find(name);
    if (it == spec_.params.end()) return fallback;
    std::size_t v = 0;
    const auto& s = it->second;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      throw ConfigError("parameter '" + name + "' of '" + key_ + "' is not a non-negative integer: '" + s + "'");
    }
    return v;
  }

 private:
  const DetectorSpec& spec_;
  const std::string& key_;
};

}  // namespace

const std::vector<std::string>& detector_names() {
  static const std::vector<std::string> names{"mddm-a", "mddm-g", "mddm-e", "fhddm", "cusum", "page-hinkley",
                                              "ddm",    "eddm",   "rddm",   "adwin", "none"};
  return names;
}

std::string canonical_detector(std::string_view name) {
  std::string key = lower(name);
  if (key == "ph" || key == "pagehinkley") key = "page-hinkley";
  if (key == "mddma") key = "mddm-a";
  if (key == "mddmg") key = "mddm-g";
  if (key == "mddme") key = "mddm-e";
  if (parameter_table().count(key) == 0) {
    throw ConfigError("unknown detector '" + std::string(name) + "' (valid: " + join(detector_names()) + ")");
  }
  return key;
}

const std::vector<std::string>& detector_parameters(std::string_view name) {
  return parameter_table().at(canonical_detector(name));
}

DetectorPtr make_detector(const DetectorSpec& spec, std::size_t default_window) {
  const std::string key = canonical_detector(spec.name);
  const Params p(spec, key);

  if (key == "none") return nullptr;
  if (key == "mddm-a" || key == "mddm-g" || key == "mddm-e" || key == "fhddm") {
    McDiarmidConfig c;
    c.window_size = p.count("n", default_window);
    c.delta = p.real("delta", 1e-6);
    if (key == "mddm-a") c.scheme = Arithmetic{p.real("d", 0.01)};
    if (key == "mddm-g") c.scheme = Geometric{p.real("r", 1.01)};
    if (key == "mddm-e") c.scheme = Euler{p.real("lambda", 0.01)};
    if (key == "fhddm") c.scheme = Uniform{};
    return std::make_unique<McDiarmidDetector>(c);
  }
  if (key == "cusum") {
    baseline::CusumConfig c;
    c.delta = p.real("delta", c.delta, false);
    c.threshold = p.real("lambda", c.threshold);
    c.min_instances = p.count("min_instances", c.min_instances);
    c.subtract_mean = p.count("center", 1) != 0;
    return std::make_unique<baseline::Cusum>(c);
  }
  if (key == "page-hinkley") {
    baseline::PageHinkleyConfig c;
    c.delta = p.real("delta", c.delta, false);
    c.threshold = p.real("lambda", c.threshold);
    c.min_instances = p.count("min_instances", c.min_instances);
    return std::make_unique<baseline::PageHinkley>(c);
  }
  if (key == "ddm") {
    baseline::DdmConfig c;
    c.min_instances = p.count("min_instances", c.min_instances);
    c.warning_level = p.real("warning", c.warning_level);
    c.drift_level = p.real("drift", c.drift_level);
    return std::make_unique<baseline::Ddm>(c);
  }
  if (key == "eddm") {
    baseline::EddmConfig c;
    c.warning_ratio = p.real("alpha", c.warning_ratio);
    c.drift_ratio = p.real("beta", c.drift_ratio);
    c.min_errors = p.count("min_errors", c.min_errors);
    return std::make_unique<baseline::Eddm>(c);
  }
  if (key == "rddm") {
    baseline::RddmConfig c;
    c.warning_level = p.real("warning", c.warning_level);
    c.drift_level = p.real("drift", c.drift_level);
    c.max_concept = p.count("max", c.max_concept);
    c.min_stable = p.count("min", c.min_stable);
    c.warn_limit = p.count("warn_limit", c.warn_limit);
    c.min_instances = p.count("min_instances", c.min_instances);
    return std::make_unique<baseline::Rddm>(c);
  }
  baseline::AdwinConfig c;
  c.delta = p.real("delta", c.delta);
  c.max_window = p.count("max_window", c.max_window);
  c.min_sub_window = p.count("min_sub_window", c.min_sub_window);
  return std::make_unique<baseline::Adwin>(c);
}

std::string display_name(const DetectorSpec& spec) {
  static const std::map<std::string, std::string> labels{
      {"mddm-a", "MDDM-A"}, {"mddm-g", "MDDM-G"}, {"mddm-e", "MDDM-E"}, {"fhddm", "FHDDM"},
      {"cusum", "CUSUM"},   {"page-hinkley", "PageHinkley"},           {"ddm", "DDM"},
      {"eddm", "EDDM"},     {"rddm", "RDDM"},     {"adwin", "ADWIN"},   {"none", "None"},
  };
  std::string label = labels.at(canonical_detector(spec.name));
  std::string extra;
  for (const auto& [k, v] : spec.params) {
    extra += (extra.empty() ? "" : ",") + k + "=" + v;
  }
  return extra.empty() ? label : label + "[" + extra + "]";
}

}  // namespace mddm
