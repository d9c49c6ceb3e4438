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

#include "sar/harness/experiment.hpp"

#include <atomic>
#include <cmath>
#include <set>
#include <stdexcept>
#include <thread>

namespace sar::harness {

SummaryStats summarize(const std::vector<double>& values) {
  SummaryStats s;
  if (values.empty()) return s;
  s.count = static_cast<int>(values.size());
  s.min = values.front();
  s.max = values.front();
  double sum = 0.0;
  for (double v : values) {
    sum += v;
    s.min = std::min(s.min, v);
    s.max = std::max(s.max, v);
  }
  s.mean = sum / s.count;
  if (s.count >= 2) {
    double ss = 0.0;
    for (double v : values) ss += (v - s.mean) * (v - s.mean);
    s.sd = std::sqrt(ss / (s.count - 1));
  }
  return s;
}

ExperimentResult run_experiment(const std::vector<Scenario>& scenarios,
                                int trials, std::uint64_t base_seed,
                                int threads) {
  if (trials < 1) throw std::invalid_argument("run_experiment: trials must be >= 1");
  if (threads < 1) throw std::invalid_argument("run_experiment: threads must be >= 1");
  std::set<std::string> names;
  for (const Scenario& sc : scenarios) {
    try {
      validate(sc);
    } catch (const std::exception& e) {
      throw std::invalid_argument("scenario '" + sc.name + "': " + e.what());
    }
    if (!names.insert(sc.name).second)
      throw std::invalid_argument("scenario name '" + sc.name +
                                  "' appears twice in the experiment");
  }

  const std::size_t total = scenarios.size() * static_cast<std::size_t>(trials);
  std::vector<sim::TrialMetrics> cells(total);
  std::vector<std::string> failures(total);

  auto run_cell = [&](std::size_t flat) {
    const std::size_t si = flat / static_cast<std::size_t>(trials);
    const int ti = static_cast<int>(flat % static_cast<std::size_t>(trials));
    try {
      cells[flat] = sim::run_trial(scenarios[si], base_seed + static_cast<std::uint64_t>(ti));
    } catch (const std::exception& e) {
      failures[flat] = "scenario '" + scenarios[si].name + "' trial " +
                       std::to_string(ti) + ": " + e.what();
    }
  };

  if (threads == 1 || total <= 1) {
    for (std::size_t flat = 0; flat < total; ++flat) run_cell(flat);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t flat = next.fetch_add(1); flat < total; flat = next.fetch_add(1))
        run_cell(flat);
    };
    std::vector<std::thread> pool;
    const int n = std::min<int>(threads, static_cast<int>(total));
    pool.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  for (const std::string& f : failures)
    if (!f.empty()) throw std::runtime_error("experiment aborted: " + f);

  ExperimentResult result;
  for (std::size_t si = 0; si < scenarios.size(); ++si) {
    std::vector<double> rescued, energy, per_unit;
    for (int ti = 0; ti < trials; ++ti) {
      const std::size_t flat = si * static_cast<std::size_t>(trials) +
                               static_cast<std::size_t>(ti);
      TrialRow row;
      row.scenario = scenarios[si].name;
      row.trial = ti;
      row.seed = base_seed + static_cast<std::uint64_t>(ti);
      row.metrics = cells[flat];
      rescued.push_back(row.metrics.rescued_units);
      energy.push_back(row.metrics.total_energy_spent);
      if (row.metrics.energy_per_unit) per_unit.push_back(*row.metrics.energy_per_unit);
      result.trials.push_back(std::move(row));
    }
    ScenarioStats stats;
    stats.scenario = scenarios[si].name;
    stats.n_trials = trials;
    stats.rescued = summarize(rescued);
    stats.total_energy = summarize(energy);
    stats.energy_per_unit = summarize(per_unit);
    result.aggregate.rows.push_back(std::move(stats));
  }
  return result;
}

}  // namespace sar::harness
