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

#include <array>
#include <string>
#include <vector>

namespace sar {

/// The three rescue-robot classes. A carrier hauls victims, a supplier
/// stocks rescue resources, an observer surveys and relays information.
enum class RobotClass { Carrier, Supplier, Observer };

constexpr std::array<RobotClass, 3> kAllClasses = {
    RobotClass::Carrier, RobotClass::Supplier, RobotClass::Observer};

std::string to_string(RobotClass cls);

/// Per-class capability vector.
///
/// `sen` may be +infinity, which models whole-map perception; all other
/// fields are finite. Velocities are strictly positive.
struct CapabilityProfile {
  double v = 1.0;     ///< max velocity, distance units per second
  double com = 1.0;   ///< communication radius, distance units
  double sen = 1.0;   ///< sensing radius, distance units (may be +inf)
  double eng = 100;   ///< energy rating, percent in [0, 100]
  double res = 0.0;   ///< rescue resource stock, units
  double cap = 0.0;   ///< carrying capacity per round, units

  bool operator==(const CapabilityProfile&) const = default;
};

/// Capability profiles for all three classes.
struct ProfileSet {
  CapabilityProfile carrier;
  CapabilityProfile supplier;
  CapabilityProfile observer;

  const CapabilityProfile& of(RobotClass cls) const;
  bool operator==(const ProfileSet&) const = default;
};

/// Team head-count per class.
struct TeamComposition {
  int x = 0;  ///< carriers
  int y = 0;  ///< suppliers
  int z = 0;  ///< observers

  int size() const { return x + y + z; }
  bool operator==(const TeamComposition&) const = default;
};

std::string to_string(const TeamComposition& comp);

/// Mission and environment parameters used by the expectation engine and
/// the team optimizer.
struct MissionSpec {
  double t_n = 300.0;  ///< mission time budget, seconds
  double l = 10.0;     ///< distance from group start to rescue site
  int n = 0;           ///< obstacle count
  double c = 1.0;      ///< encounter-rate coefficient, area units
  double t_c = 0.0;    ///< time to tackle one obstacle, seconds
  double e_c = 0.0;    ///< energy to tackle one obstacle, percent
  double e_t = 0.0;    ///< traveling energy per round, percent
  /// Required cumulative delivery: element 0 is carrying capacity,
  /// element 1 (optional) is rescue resources. Empty means unconstrained.
  std::vector<double> requirement;

  bool operator==(const MissionSpec&) const = default;
};

/// Throws std::invalid_argument naming the first field out of range.
void validate(const MissionSpec& mission);

/// Built-in profile for a class. Pure; repeated calls return identical
/// values. The shipped set satisfies check_dominance under the default
/// options.
CapabilityProfile default_profile(RobotClass cls);

/// All three built-in profiles.
ProfileSet default_profiles();

/// Quantifiers for the class-dominance relations: "much greater" means a
/// ratio of at least `kappa`, "similar" means a ratio inside
/// [approx_lo, approx_hi].
struct DominanceOptions {
  double kappa = 10.0;
  double approx_lo = 0.5;
  double approx_hi = 2.0;
};

/// One violated dominance relation. `relation` is one of "communication",
/// "sensing", "velocity", "energy", "resources", "capacity".
struct DominanceViolation {
  std::string relation;
  std::string detail;
};

/// Checks the six class-dominance relations. Returns one descriptor per
/// violated relation; an empty list means the profile set is consistent.
/// Violations are data, not failures.
std::vector<DominanceViolation> check_dominance(
    const ProfileSet& profiles, const DominanceOptions& opts = {});

/// Componentwise group capability across a composition.
struct AggregateCapability {
  double total_cap = 0.0;
  double total_res = 0.0;
  double total_sen = 0.0;  ///< +inf when any counted member senses +inf
  double min_v = 0.0;      ///< the group travels at its slowest member
};

/// Sums capacity, resources and sensing over the composition and takes the
/// minimum velocity over classes with nonzero count. Rejects an empty
/// composition with std::invalid_argument.
AggregateCapability aggregate_capability(const TeamComposition& comp,
                                         const ProfileSet& profiles);

}  // namespace sar
