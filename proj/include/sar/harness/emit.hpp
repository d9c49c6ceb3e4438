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

#include <string>
#include <vector>

#include "sar/analytics.hpp"
#include "sar/harness/experiment.hpp"
#include "sar/harness/validation.hpp"
#include "sar/team_optimizer.hpp"

namespace sar::harness {

/// Formats with nine significant digits; unavailable values render as nan.
std::string fmt_number(double value);

// CSV renderers. Every number is serialized deterministically, so repeated
// runs with the same inputs produce byte-identical files.
std::string trial_csv(const std::vector<TrialRow>& rows);
std::string aggregate_csv(const AggregateStats& stats);
std::string validation_csv(const ValidationReport& report);
std::string evaluations_csv(const std::vector<analytics::GroupEvaluation>& evals);
std::string ranked_csv(const std::vector<optimizer::RankedComposition>& ranked);

// JSON renderers mirroring the CSV fields.
std::string experiment_json(const ExperimentResult& result);
std::string validation_json(const ValidationReport& report);
std::string evaluation_json(const analytics::GroupEvaluation& eval);
std::string comparison_json(const analytics::ComparisonReport& report);
std::string optimization_json(const optimizer::OptimizationResult& result);

/// Writes content to path, throwing std::runtime_error on failure.
void write_file(const std::string& path, const std::string& content);

}  // namespace sar::harness
