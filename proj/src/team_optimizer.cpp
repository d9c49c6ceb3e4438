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

#include "sar/team_optimizer.hpp"

#include <tuple>

namespace sar::optimizer {

namespace {

constexpr int kMaxBudget = 60;

/// Orders candidates best-first: higher utility, then lower energy, then
/// lexicographically smaller composition.
bool better(const RankedComposition& a, const RankedComposition& b) {
  if (a.report.expected_utility != b.report.expected_utility)
    return a.report.expected_utility > b.report.expected_utility;
  if (a.report.expected_energy != b.report.expected_energy)
    return a.report.expected_energy < b.report.expected_energy;
  return std::tuple(a.comp.x, a.comp.y, a.comp.z) <
         std::tuple(b.comp.x, b.comp.y, b.comp.z);
}

}  // namespace

std::vector<TeamComposition> enumerate_compositions(int budget, bool exact) {
  if (budget < 1) throw std::invalid_argument("enumerate_compositions: budget must be >= 1");
  std::vector<TeamComposition> out;
  for (int x = 0; x <= budget; ++x)
    for (int y = 0; y + x <= budget; ++y) {
      if (exact) {
        out.push_back({x, y, budget - x - y});
      } else {
        for (int z = 0; x + y + z <= budget; ++z) {
          if (x + y + z == 0) continue;
          out.push_back({x, y, z});
        }
      }
    }
  return out;
}

bool is_feasible(const TeamComposition& comp, const MissionSpec& mission,
                 const ProfileSet& profiles) {
  if (mission.requirement.empty()) return true;
  if (mission.requirement.size() > 2)
    throw std::invalid_argument(
        "is_feasible: requirement vectors support at most (capacity, resources)");

  const AggregateCapability agg = aggregate_capability(comp, profiles);
  const double lambda = analytics::round_trip_lambda(mission, agg.min_v, agg.total_sen);
  const double rounds = analytics::expected_rounds(mission.t_n, lambda);

  const double delivered[2] = {rounds * agg.total_cap, rounds * agg.total_res};
  for (std::size_t i = 0; i < mission.requirement.size(); ++i)
    if (delivered[i] < mission.requirement[i]) return false;
  return true;
}

std::vector<RankedComposition> evaluate_all(int budget,
                                            const MissionSpec& mission,
                                            const ProfileSet& profiles,
                                            bool exact) {
  validate(mission);
  std::vector<RankedComposition> out;
  for (const TeamComposition& comp : enumerate_compositions(budget, exact)) {
    RankedComposition rc;
    rc.comp = comp;
    rc.report = analytics::evaluate_group(comp, mission, profiles);
    rc.feasible = is_feasible(comp, mission, profiles);
    out.push_back(std::move(rc));
  }
  return out;
}

OptimizationResult optimize_team(int budget, const MissionSpec& mission,
                                 const ProfileSet& profiles, bool exact) {
  if (budget < 1) throw std::invalid_argument("optimize_team: budget must be >= 1");
  if (budget > kMaxBudget)
    throw std::invalid_argument("optimize_team: budget exceeds the enumeration guard of 60");

  const auto candidates = evaluate_all(budget, mission, profiles, exact);

  const RankedComposition* best = nullptr;
  int feasible = 0;
  for (const auto& rc : candidates) {
    if (!rc.feasible) continue;
    ++feasible;
    if (best == nullptr || better(rc, *best)) best = &rc;
  }
  if (best == nullptr)
    throw NoFeasibleComposition("no feasible composition within budget " +
                                std::to_string(budget));

  OptimizationResult result;
  result.best = best->comp;
  result.report = best->report;
  result.feasible_count = feasible;
  result.evaluated_count = static_cast<int>(candidates.size());
  return result;
}

}  // namespace sar::optimizer
