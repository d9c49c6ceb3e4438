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

#include "sar/harness/emit.hpp"

#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace sar::harness {

namespace {

using nlohmann::json;

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

json stats_json(const SummaryStats& s) {
  json j;
  j["count"] = s.count;
  if (s.count > 0) {
    j["mean"] = s.mean;
    j["min"] = s.min;
    j["max"] = s.max;
  }
  if (s.sd) j["sd"] = *s.sd;
  return j;
}

json composition_json(const TeamComposition& comp) {
  return json{{"x", comp.x}, {"y", comp.y}, {"z", comp.z}};
}

json report_json(const analytics::AnalyticReport& r) {
  return json{{"lambda_round", r.lambda_round},
              {"expected_rounds", r.expected_rounds},
              {"throughput_per_round", r.throughput_per_round},
              {"expected_utility", r.expected_utility},
              {"expected_energy", r.expected_energy}};
}

json mission_json(const MissionSpec& m) {
  return json{{"t_n", m.t_n},   {"l", m.l},     {"n", m.n},
              {"c", m.c},       {"t_c", m.t_c}, {"e_c", m.e_c},
              {"e_t", m.e_t},   {"requirement", m.requirement}};
}

}  // namespace

std::string fmt_number(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", value);
  return buf;
}

std::string trial_csv(const std::vector<TrialRow>& rows) {
  std::ostringstream os;
  os << "scenario,trial,seed,rescued_units,total_energy,energy_per_unit,rounds_completed\n";
  for (const TrialRow& row : rows) {
    os << row.scenario << ',' << row.trial << ',' << row.seed << ','
       << fmt_number(row.metrics.rescued_units) << ','
       << fmt_number(row.metrics.total_energy_spent) << ','
       << fmt_number(row.metrics.energy_per_unit.value_or(kNan)) << ','
       << row.metrics.rounds_completed << '\n';
  }
  return os.str();
}

std::string aggregate_csv(const AggregateStats& stats) {
  std::ostringstream os;
  os << "scenario,n_trials,mean_rescued,sd_rescued,mean_energy_per_unit,sd_energy_per_unit\n";
  for (const ScenarioStats& row : stats.rows) {
    os << row.scenario << ',' << row.n_trials << ','
       << fmt_number(row.rescued.count > 0 ? row.rescued.mean : kNan) << ','
       << fmt_number(row.rescued.sd.value_or(kNan)) << ','
       << fmt_number(row.energy_per_unit.count > 0 ? row.energy_per_unit.mean : kNan)
       << ',' << fmt_number(row.energy_per_unit.sd.value_or(kNan)) << '\n';
  }
  return os.str();
}

std::string validation_csv(const ValidationReport& report) {
  std::ostringstream os;
  os << "lambda,samples,analytic_reciprocal,empirical_reciprocal,reciprocal_rel_error,"
        "empirical_mean,mean_rel_error,empirical_variance,variance_rel_error\n";
  for (const LambdaValidation& row : report.rows) {
    os << fmt_number(row.lambda) << ',' << row.samples << ','
       << fmt_number(row.analytic_reciprocal) << ','
       << fmt_number(row.empirical_reciprocal) << ','
       << fmt_number(row.reciprocal_rel_error) << ','
       << fmt_number(row.empirical_mean) << ',' << fmt_number(row.mean_rel_error)
       << ',' << fmt_number(row.empirical_variance) << ','
       << fmt_number(row.variance_rel_error) << '\n';
  }
  return os.str();
}

std::string evaluations_csv(const std::vector<analytics::GroupEvaluation>& evals) {
  std::ostringstream os;
  os << "x,y,z,lambda_round,expected_rounds,throughput_per_round,expected_utility,"
        "expected_energy\n";
  for (const analytics::GroupEvaluation& e : evals) {
    os << e.comp.x << ',' << e.comp.y << ',' << e.comp.z << ','
       << fmt_number(e.report.lambda_round) << ','
       << fmt_number(e.report.expected_rounds) << ','
       << fmt_number(e.report.throughput_per_round) << ','
       << fmt_number(e.report.expected_utility) << ','
       << fmt_number(e.report.expected_energy) << '\n';
  }
  return os.str();
}

std::string ranked_csv(const std::vector<optimizer::RankedComposition>& ranked) {
  std::ostringstream os;
  os << "rank,x,y,z,feasible,lambda_round,expected_rounds,throughput_per_round,"
        "expected_utility,expected_energy\n";
  int rank = 1;
  for (const optimizer::RankedComposition& rc : ranked) {
    os << rank++ << ',' << rc.comp.x << ',' << rc.comp.y << ',' << rc.comp.z << ','
       << (rc.feasible ? "true" : "false") << ','
       << fmt_number(rc.report.lambda_round) << ','
       << fmt_number(rc.report.expected_rounds) << ','
       << fmt_number(rc.report.throughput_per_round) << ','
       << fmt_number(rc.report.expected_utility) << ','
       << fmt_number(rc.report.expected_energy) << '\n';
  }
  return os.str();
}

std::string experiment_json(const ExperimentResult& result) {
  json trials = json::array();
  for (const TrialRow& row : result.trials) {
    json t;
    t["scenario"] = row.scenario;
    t["trial"] = row.trial;
    t["seed"] = row.seed;
    t["rescued_units"] = row.metrics.rescued_units;
    t["total_energy"] = row.metrics.total_energy_spent;
    if (row.metrics.energy_per_unit)
      t["energy_per_unit"] = *row.metrics.energy_per_unit;
    else
      t["energy_per_unit"] = nullptr;
    t["rounds_completed"] = row.metrics.rounds_completed;
    trials.push_back(std::move(t));
  }
  json aggregate = json::array();
  for (const ScenarioStats& row : result.aggregate.rows) {
    aggregate.push_back(json{{"scenario", row.scenario},
                             {"n_trials", row.n_trials},
                             {"rescued", stats_json(row.rescued)},
                             {"total_energy", stats_json(row.total_energy)},
                             {"energy_per_unit", stats_json(row.energy_per_unit)}});
  }
  return json{{"trials", std::move(trials)}, {"aggregate", std::move(aggregate)}}
      .dump(2);
}

std::string validation_json(const ValidationReport& report) {
  json rows = json::array();
  for (const LambdaValidation& row : report.rows) {
    rows.push_back(json{{"lambda", row.lambda},
                        {"samples", row.samples},
                        {"analytic_reciprocal", row.analytic_reciprocal},
                        {"empirical_reciprocal", row.empirical_reciprocal},
                        {"reciprocal_rel_error", row.reciprocal_rel_error},
                        {"empirical_mean", row.empirical_mean},
                        {"mean_rel_error", row.mean_rel_error},
                        {"empirical_variance", row.empirical_variance},
                        {"variance_rel_error", row.variance_rel_error}});
  }
  return json{{"rows", std::move(rows)}}.dump(2);
}

std::string evaluation_json(const analytics::GroupEvaluation& eval) {
  return json{{"composition", composition_json(eval.comp)},
              {"mission", mission_json(eval.mission)},
              {"report", report_json(eval.report)}}
      .dump(2);
}

std::string comparison_json(const analytics::ComparisonReport& report) {
  return json{{"utility_ratio", report.utility_ratio},
              {"energy_difference", report.energy_difference},
              {"energy_per_unit_difference", report.energy_per_unit_difference},
              {"dominant", report.dominant},
              {"notes", report.notes}}
      .dump(2);
}

std::string optimization_json(const optimizer::OptimizationResult& result) {
  return json{{"best", composition_json(result.best)},
              {"report", report_json(result.report)},
              {"feasible_count", result.feasible_count},
              {"evaluated_count", result.evaluated_count}}
      .dump(2);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file '" + path + "'");
  out << content;
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

}  // namespace sar::harness
