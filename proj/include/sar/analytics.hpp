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

#include "sar/types.hpp"

namespace sar::analytics {

/// Closed-form expectations for one group on one mission.
///
/// expected_utility always equals expected_rounds * throughput_per_round,
/// and expected_rounds never exceeds the mission time budget.
struct AnalyticReport {
  double lambda_round = 0.0;        ///< expected per-round time parameter
  double expected_rounds = 0.0;     ///< E[number of shuttle rounds]
  double throughput_per_round = 0;  ///< units rescued per round
  double expected_utility = 0.0;    ///< E[U], units rescued in t_n
  double expected_energy = 0.0;     ///< E[E], percent
};

/// A composition evaluated against a mission; the input shape for compare().
struct GroupEvaluation {
  TeamComposition comp;
  MissionSpec mission;
  AnalyticReport report;
};

/// Pairwise comparison of two evaluated groups.
struct ComparisonReport {
  double utility_ratio = 1.0;              ///< E(U)_a / E(U)_b
  double energy_difference = 0.0;          ///< E(E)_a - E(E)_b, percent
  double energy_per_unit_difference = 0.0; ///< E(E)_a/E(U)_a - E(E)_b/E(U)_b
  std::string dominant;                    ///< label of the higher-utility group
  std::vector<std::string> notes;          ///< matched comparison patterns
};

/// Obstacle encounter rate c*n / sen_total. Zero when n = 0 or sensing is
/// infinite. Rejects sen_total <= 0.
double encounter_rate(double c, int n, double sen_total);

/// Expected per-round time 2l/group_v + 2*t_c*c*n/sen_total; the obstacle
/// term vanishes for infinite sensing. Rejects non-positive velocity.
double round_trip_lambda(const MissionSpec& mission, double group_v,
                         double sen_total);

/// E[1/(T+1)] for T ~ Poisson(lambda): (1 - e^-lambda)/lambda, continued
/// with 1 at lambda = 0. Strictly decreasing, valued in (0, 1].
double poisson_reciprocal_expectation(double lambda);

/// t_n * E[1/(T+1)]: the expected number of shuttle rounds in the budget.
double expected_rounds(double t_n, double lambda);

/// Units the group can deliver per round: limited by both carrying
/// capacity and rescue resources.
double effective_throughput(double total_cap, double total_res);

/// Full evaluation of a composition against a mission: group aggregates,
/// round lambda from the slowest member and summed sensing, utility and
/// energy. One formula covers pure and mixed groups.
AnalyticReport evaluate_group(const TeamComposition& comp,
                              const MissionSpec& mission,
                              const ProfileSet& profiles);

/// Same as evaluate_group; named entry points for the two headline figures.
AnalyticReport expected_utility(const TeamComposition& comp,
                                const MissionSpec& mission,
                                const ProfileSet& profiles);
AnalyticReport expected_energy(const TeamComposition& comp,
                               const MissionSpec& mission,
                               const ProfileSet& profiles);

/// Compares two evaluations taken against the same mission (rejects
/// mismatched missions). `label_a`/`label_b` name the groups in the output;
/// `dominant` is "tie" on exact utility equality.
ComparisonReport compare(const GroupEvaluation& a, const GroupEvaluation& b,
                         const std::string& label_a = "a",
                         const std::string& label_b = "b");

}  // namespace sar::analytics
