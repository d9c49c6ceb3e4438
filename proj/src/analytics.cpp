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

#include "sar/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sar::analytics {

double encounter_rate(double c, int n, double sen_total) {
  if (!(sen_total > 0)) throw std::invalid_argument("encounter_rate: sen_total must be positive");
  if (n < 0) throw std::invalid_argument("encounter_rate: n must be non-negative");
  if (n == 0 || std::isinf(sen_total)) return 0.0;
  return c * n / sen_total;
}

double round_trip_lambda(const MissionSpec& mission, double group_v,
                         double sen_total) {
  if (!(group_v > 0)) throw std::invalid_argument("round_trip_lambda: velocity must be positive");
  const double travel = 2.0 * mission.l / group_v;
  const double obstacles =
      2.0 * mission.t_c * encounter_rate(mission.c, mission.n, sen_total);
  return travel + obstacles;
}

double poisson_reciprocal_expectation(double lambda) {
  if (lambda < 0) throw std::invalid_argument("poisson_reciprocal_expectation: lambda must be non-negative");
  if (lambda == 0.0) return 1.0;
  return -std::expm1(-lambda) / lambda;
}

double expected_rounds(double t_n, double lambda) {
  if (!(t_n > 0)) throw std::invalid_argument("expected_rounds: t_n must be positive");
  return t_n * poisson_reciprocal_expectation(lambda);
}

double effective_throughput(double total_cap, double total_res) {
  return std::min(total_cap, total_res);
}

AnalyticReport evaluate_group(const TeamComposition& comp,
                              const MissionSpec& mission,
                              const ProfileSet& profiles) {
  validate(mission);
  const AggregateCapability agg = aggregate_capability(comp, profiles);

  AnalyticReport r;
  r.lambda_round = round_trip_lambda(mission, agg.min_v, agg.total_sen);
  r.expected_rounds = expected_rounds(mission.t_n, r.lambda_round);
  r.throughput_per_round = effective_throughput(agg.total_cap, agg.total_res);
  r.expected_utility = r.expected_rounds * r.throughput_per_round;
  r.expected_energy =
      mission.e_t +
      2.0 * encounter_rate(mission.c, mission.n, agg.total_sen) * mission.e_c +
      r.expected_utility;
  return r;
}

AnalyticReport expected_utility(const TeamComposition& comp,
                                const MissionSpec& mission,
                                const ProfileSet& profiles) {
  return evaluate_group(comp, mission, profiles);
}

AnalyticReport expected_energy(const TeamComposition& comp,
                               const MissionSpec& mission,
                               const ProfileSet& profiles) {
  return evaluate_group(comp, mission, profiles);
}

namespace {

bool pure_carriers(const TeamComposition& c) { return c.x > 0 && c.y == 0 && c.z == 0; }
bool pure_suppliers(const TeamComposition& c) { return c.x == 0 && c.y > 0 && c.z == 0; }
bool pure_observers(const TeamComposition& c) { return c.x == 0 && c.y == 0 && c.z > 0; }
bool pure(const TeamComposition& c) {
  return pure_carriers(c) || pure_suppliers(c) || pure_observers(c);
}

void tag_patterns(const GroupEvaluation& a, const GroupEvaluation& b,
                  std::vector<std::string>& notes) {
  if (a.comp == b.comp) notes.push_back("identical-groups");
  if (pure(a.comp) && pure(b.comp)) {
    notes.push_back("homogeneous-vs-homogeneous");
    if (a.report.throughput_per_round == b.report.throughput_per_round &&
        a.comp.size() == b.comp.size())
      notes.push_back("equal-throughput-pure-pair");
  }
  const bool a_mixed_cs = a.comp.x > 0 && a.comp.y > 0 && a.comp.z == 0;
  if (a_mixed_cs && pure_carriers(b.comp))
    notes.push_back("carrier-supplier-mix-vs-pure-carriers");
  const bool a_mixed = !pure(a.comp) && a.comp.size() > 0;
  if (a_mixed && pure(b.comp)) notes.push_back("heterogeneous-vs-homogeneous");
  if (a_mixed && !pure(b.comp)) notes.push_back("heterogeneous-vs-heterogeneous");
}

}  // namespace

ComparisonReport compare(const GroupEvaluation& a, const GroupEvaluation& b,
                         const std::string& label_a,
                         const std::string& label_b) {
  if (!(a.mission == b.mission))
    throw std::invalid_argument("compare: evaluations use different missions");
  if (!(b.report.expected_utility > 0))
    throw std::invalid_argument("compare: reference group has zero expected utility");

  ComparisonReport out;
  out.utility_ratio = a.report.expected_utility / b.report.expected_utility;
  out.energy_difference = a.report.expected_energy - b.report.expected_energy;
  out.energy_per_unit_difference =
      a.report.expected_energy / a.report.expected_utility -
      b.report.expected_energy / b.report.expected_utility;
  if (a.report.expected_utility > b.report.expected_utility)
    out.dominant = label_a;
  else if (a.report.expected_utility < b.report.expected_utility)
    out.dominant = label_b;
  else
    out.dominant = "tie";
  tag_patterns(a, b, out.notes);
  return out;
}

}  // namespace sar::analytics
