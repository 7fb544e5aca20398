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

#include <ostream>
#include <span>

#include "mddm/experiment.hpp"

namespace mddm::experiment {

/// Header: stream,detector,seed,run,delay_mean,tp,fp,fn,accuracy,alarm_count.
/// Rows in cell order, then run order. Unscored cells leave the delay and
/// TP/FP/FN columns empty.
void write_runs_csv(std::ostream& out, std::span<const CellResult> cells);

/// One row per cell with _mean/_std columns for every metric and an error
/// column for failed cells.
void write_summary_csv(std::ostream& out, std::span<const CellResult> cells);

/// Console table grouped by stream, values as mean +- std.
void print_table(std::ostream& out, std::span<const CellResult> cells);

}  // namespace mddm::experiment
