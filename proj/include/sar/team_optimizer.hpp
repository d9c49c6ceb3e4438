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

#include <stdexcept>
#include <vector>

#include "sar/analytics.hpp"
#include "sar/types.hpp"

namespace sar::optimizer {

/// Thrown by optimize_team when no enumerated composition meets the
/// mission requirement.
class NoFeasibleComposition : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OptimizationResult {
  TeamComposition best;
  analytics::AnalyticReport report;
  int feasible_count = 0;
  int evaluated_count = 0;
};

/// One evaluated candidate, used for ranked output.
struct RankedComposition {
  TeamComposition comp;
  analytics::AnalyticReport report;
  bool feasible = false;
};

/// All compositions with x+y+z == budget (exact) or 1 <= x+y+z <= budget
/// (inexact), in lexicographic (x, y, z) order. Rejects budget < 1.
std::vector<TeamComposition> enumerate_compositions(int budget, bool exact);

/// True iff the expected cumulative delivery, expected_rounds times the
/// aggregate (capacity, resources) vector, dominates the mission
/// requirement componentwise. Vacuously true for an empty requirement.
/// Rejects requirement vectors longer than two entries.
bool is_feasible(const TeamComposition& comp, const MissionSpec& mission,
                 const ProfileSet& profiles);

/// Every enumerated candidate with its evaluation, in enumeration order.
std::vector<RankedComposition> evaluate_all(int budget,
                                            const MissionSpec& mission,
                                            const ProfileSet& profiles,
                                            bool exact);

/// Exhaustive argmax of expected utility over the enumerated candidates
/// that pass is_feasible. Ties broken by lower expected energy, then by
/// lexicographically smallest (x, y, z). Budgets above 60 are rejected;
/// an empty feasible set raises NoFeasibleComposition.
OptimizationResult optimize_team(int budget, const MissionSpec& mission,
                                 const ProfileSet& profiles,
                                 bool exact = false);

}  // namespace sar::optimizer
