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

// Command-line runner: runs a (stream x detector) matrix and reports
// per-run and aggregate results.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "mddm/detector_factory.hpp"
#include "mddm/errors.hpp"
#include "mddm/experiment.hpp"
#include "mddm/generators.hpp"
#include "mddm/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitData = 3;
constexpr int kExitInternal = 4;

struct Options {
  std::vector<std::string> streams{"sine1"};
  std::vector<std::string> detectors{"mddm-a"};
  std::size_t runs = 100;
  std::uint64_t seed = 1;
  std::optional<std::size_t> window_size;
  std::optional<double> delta;
  std::optional<std::size_t> accept_delay;
  std::optional<double> noise;
  std::optional<std::size_t> length;
  std::string policy = "reset";
  std::string out;
  std::string summary;
  std::string dump;
  std::vector<std::string> sets;
  std::size_t jobs = 0;
  bool quiet = false;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(s);
  while (std::getline(in, part, sep)) parts.push_back(part);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

// "--set [detector.]key=v1|v2|..."
struct Override {
  std::string detector;  // empty: every detector that has `key`
  std::string key;
  std::vector<std::string> values;
};

Override parse_override(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw mddm::ConfigError("--set expects key=value, got '" + text + "'");
  }
  Override o;
  std::string key = text.substr(0, eq);
  if (const auto dot = key.find('.'); dot != std::string::npos) {
    o.detector = mddm::canonical_detector(key.substr(0, dot));
    key = key.substr(dot + 1);
  }
  o.key = key;
  o.values = split(text.substr(eq + 1), '|');
  for (const auto& v : o.values) {
    if (v.empty()) throw mddm::ConfigError("--set " + text + ": empty value");
  }
  return o;
}

bool accepts(const std::string& detector, const std::string& key) {
  const auto& keys = mddm::detector_parameters(detector);
  return std::find(keys.begin(), keys.end(), key) != keys.end();
}

// One DetectorSpec per combination of the swept values that apply.
std::vector<mddm::DetectorSpec> expand_detector(const std::string& name, const Options& opt,
                                                const std::vector<Override>& overrides) {
  mddm::DetectorSpec base;
  base.name = mddm::canonical_detector(name);
  base.window_size = opt.window_size;
  base.delta = opt.delta;
  std::vector<mddm::DetectorSpec> specs{base};
  for (const auto& o : overrides) {
    if (!o.detector.empty() ? o.detector != base.name : !accepts(base.name, o.key)) continue;
    if (!accepts(base.name, o.key)) {
      throw mddm::ConfigError("detector '" + base.name + "' has no parameter '" + o.key + "'");
    }
    std::vector<mddm::DetectorSpec> next;
    for (const auto& s : specs) {
      for (const auto& v : o.values) {
        auto copy = s;
        copy.params[o.key] = v;
        next.push_back(std::move(copy));
      }
    }
    specs = std::move(next);
  }
  return specs;
}

mddm::stream::StreamSpec make_stream(const std::string& name, const Options& opt) {
  using mddm::stream::StreamFamily;
  const std::filesystem::path path(name);
  mddm::stream::StreamSpec spec;
  if (path.extension() == ".csv" || name.find('/') != std::string::npos) {
    if (!std::filesystem::exists(path)) {
      throw mddm::DataError("no such file: '" + name + "'");
    }
    spec.family = StreamFamily::CsvFile;
    spec.csv_path = name;
    spec.schedule.drift_positions.clear();
    return spec;
  }
  spec = mddm::stream::default_spec(mddm::stream::parse_family(name));
  if (opt.noise) spec.noise = *opt.noise;
  if (opt.length) {
    // Keep the family's drift spacing, dropping drifts past the end.
    spec.length = *opt.length;
    auto& d = spec.schedule.drift_positions;
    d.erase(std::remove_if(d.begin(), d.end(), [&](std::size_t p) { return p >= spec.length; }), d.end());
  }
  return spec;
}

std::vector<std::string> flatten(const std::vector<std::string>& items) {
  std::vector<std::string> out;
  for (const auto& item : items) {
    for (auto& part : split(item, ',')) {
      if (!part.empty()) out.push_back(part);
    }
  }
  return out;
}

std::vector<mddm::experiment::ExperimentConfig> build_matrix(const Options& opt) {
  std::vector<Override> overrides;
  for (const auto& s : opt.sets) overrides.push_back(parse_override(s));

  const auto policy = mddm::learn::AdaptationPolicy::parse(opt.policy);
  const auto detectors = flatten(opt.detectors);
  for (const auto& o : overrides) {
    const bool used = std::any_of(detectors.begin(), detectors.end(), [&](const std::string& d) {
      const auto key = mddm::canonical_detector(d);
      return (o.detector.empty() || o.detector == key) && accepts(key, o.key);
    });
    if (!used) throw mddm::ConfigError("--set " + o.key + ": no selected detector takes this parameter");
  }

  std::vector<mddm::experiment::ExperimentConfig> cells;
  for (const auto& stream_name : flatten(opt.streams)) {
    const auto stream = make_stream(stream_name, opt);
    if (policy.kind == mddm::learn::AdaptationPolicy::Kind::Blind) {
      mddm::experiment::ExperimentConfig c;
      c.stream = stream;
      c.detector.name = "none";
      c.runs = opt.runs;
      c.base_seed = opt.seed;
      c.accept_delay = opt.accept_delay;
      c.policy = policy;
      cells.push_back(std::move(c));
      continue;
    }
    for (const auto& name : detectors) {
      for (auto& spec : expand_detector(name, opt, overrides)) {
        mddm::experiment::ExperimentConfig c;
        c.stream = stream;
        c.detector = std::move(spec);
        c.runs = opt.runs;
        c.base_seed = opt.seed;
        c.accept_delay = opt.accept_delay;
        c.policy = policy;
        // Surface bad parameters as usage errors before anything runs.
        (void)mddm::make_detector(c.detector, mddm::experiment::default_window(stream.family));
        cells.push_back(std::move(c));
      }
    }
  }
  return cells;
}

void write_file(const std::string& path, const std::function<void(std::ostream&)>& fn) {
  if (path == "-") {
    fn(std::cout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw mddm::DataError("cannot open '" + path + "' for writing");
  fn(out);
  out.flush();
  if (!out) throw mddm::DataError("failed writing '" + path + "'");
}

std::string default_summary_path(const std::string& out) {
  std::filesystem::path p(out);
  return (p.parent_path() / (p.stem().string() + "_summary.csv")).string();
}

int run(const Options& opt) {
  if (!opt.dump.empty()) {
    const auto names = flatten(opt.streams);
    if (names.size() != 1) throw mddm::ConfigError("--dump takes exactly one --stream");
    auto spec = make_stream(names.front(), opt);
    spec.seed = opt.seed;
    mddm::experiment::dump_stream(spec, opt.dump);
    return kExitOk;
  }

  const auto cells = build_matrix(opt);
  const std::size_t jobs = opt.jobs != 0 ? opt.jobs : std::max(1u, std::thread::hardware_concurrency());

  std::vector<mddm::experiment::CellResult> results;
  if (cells.size() == 1) {
    // A single cell spreads its runs over the workers and propagates errors.
    results.push_back(mddm::experiment::run_experiment(cells.front(), jobs));
  } else {
    results = mddm::experiment::run_matrix(cells, jobs);
  }

  if (!opt.quiet) mddm::experiment::print_table(std::cout, results);
  if (!opt.out.empty()) {
    write_file(opt.out, [&](std::ostream& os) { mddm::experiment::write_runs_csv(os, results); });
    const std::string summary = !opt.summary.empty() ? opt.summary
                                : opt.out == "-"     ? std::string()
                                                     : default_summary_path(opt.out);
    if (!summary.empty()) {
      write_file(summary, [&](std::ostream& os) { mddm::experiment::write_summary_csv(os, results); });
    }
  } else if (!opt.summary.empty()) {
    write_file(opt.summary, [&](std::ostream& os) { mddm::experiment::write_summary_csv(os, results); });
  }

  bool failed = false;
  for (const auto& r : results) {
    if (!r.ok()) {
      std::cerr << "mddm: " << r.stream << " / " << r.detector << ": " << r.error << '\n';
      failed = true;
    }
  }
  return failed ? kExitData : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Drift detection experiment runner (prequential Naive Bayes)", "mddm"};
  app.config_formatter(std::make_shared<CLI::ConfigINI>());
  app.set_config("--config", "", "Read options from a key=value file (one per line, # comments)");

  Options opt;
  std::string families;
  for (const char* f : {"sine1", "mixed", "circles", "led"}) families += std::string(families.empty() ? "" : ", ") + f;

  app.add_option("--stream", opt.streams, "Stream family (" + families + ") or CSV path; comma-separated for several")
      ->capture_default_str();
  app.add_option("--detector", opt.detectors, "Detector name(s), comma-separated; see --list")->capture_default_str();
  app.add_option("--runs", opt.runs, "Runs per cell; run i uses seed base+i")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--seed", opt.seed, "Base seed")->capture_default_str();
  app.add_option("--window-size", opt.window_size, "Window size n of the McDiarmid detectors (default 25, or 100 for circles/led)");
  app.add_option("--delta", opt.delta, "Confidence delta of the McDiarmid detectors and ADWIN");
  app.add_option("--accept-delay", opt.accept_delay, "Acceptable delay (default 250, or 1000 for circles/led)")
      ->check(CLI::PositiveNumber);
  app.add_option("--noise", opt.noise, "Class noise rate of synthetic streams (default 0.1)");
  app.add_option("--length", opt.length, "Synthetic stream length (default 100000)")->check(CLI::PositiveNumber);
  app.add_option("--policy", opt.policy, "On drift: reset | none | blind:<period>")->capture_default_str();
  app.add_option("--out", opt.out, "Per-run CSV path ('-' for stdout); a <stem>_summary.csv is written next to it");
  app.add_option("--summary", opt.summary, "Aggregate CSV path");
  app.add_option("--dump", opt.dump, "Write the stream (seed --seed) to this CSV path and exit");
  app.add_option("--set", opt.sets, "Detector parameter [detector.]key=value; 'a|b' sweeps values")->take_all();
  app.add_option("-j,--jobs", opt.jobs, "Worker threads (default: hardware concurrency)");
  app.add_flag("-q,--quiet", opt.quiet, "Do not print the console table");
  bool list = false;
  app.add_flag("--list", list, "List detectors and their parameters");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (list) {
      for (const auto& name : mddm::detector_names()) {
        std::cout << name;
        for (const auto& p : mddm::detector_parameters(name)) std::cout << ' ' << p;
        std::cout << '\n';
      }
      return kExitOk;
    }
    return run(opt);
  } catch (const mddm::ConfigError& e) {
    std::cerr << "mddm: " << e.what() << '\n';
    return kExitUsage;
  } catch (const mddm::ParameterError& e) {
    std::cerr << "mddm: " << e.what() << '\n';
    return kExitUsage;
  } catch (const mddm::DataError& e) {
    std::cerr << "mddm: " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "mddm: internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}
