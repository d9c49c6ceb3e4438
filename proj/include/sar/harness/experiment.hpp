/*
 * Copyright (C) 2026 sarsim contributors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sar/scenario.hpp"
#include "sar/sim/world.hpp"

namespace sar::harness {

/// Summary over a sample. The deviation uses the (count - 1) divisor and
/// is unavailable below two samples; count is zero when no trial produced
/// a defined value.
struct SummaryStats {
  int count = 0;
  double mean = 0.0;
  double min = 0.0;
  double max = 0.0;
  std::optional<double> sd;
};

SummaryStats summarize(const std::vector<double>& values);

struct TrialRow {
  std::string scenario;
  int trial = 0;
  std::uint64_t seed = 0;
  sim::TrialMetrics metrics;
};

struct ScenarioStats {
  std::string scenario;
  int n_trials = 0;
  SummaryStats rescued;
  SummaryStats total_energy;
  SummaryStats energy_per_unit;
};

struct AggregateStats {
  std::vector<ScenarioStats> rows;
};

struct ExperimentResult {
  std::vector<TrialRow> trials;  ///< scenario-major, trial-minor order
  AggregateStats aggregate;
};

/// Runs `trials` seeded trials per scenario (seed = base_seed + trial
/// index) and aggregates. Deterministic in (scenarios, trials, base_seed)
/// regardless of `threads`; a failing trial aborts the experiment naming
/// the scenario.
ExperimentResult run_experiment(const std::vector<Scenario>& scenarios,
                                int trials, std::uint64_t base_seed,
                                int threads = 1);

}  // namespace sar::harness
