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
#include <random>
#include <string>
#include <vector>

#include "sar/bt/blackboard.hpp"
#include "sar/geometry.hpp"
#include "sar/scenario.hpp"
#include "sar/types.hpp"

namespace sar::sim {

enum class Phase { ToSite, Rescuing, ToShelter, Unloading, ToCharge, Charging, Idle };

enum class DwellKind { None, Rescuing, Charging, Obstacle };

struct RobotState {
  int id = 0;
  RobotClass cls = RobotClass::Carrier;
  Vec2 position;
  double velocity_cap = 1.0;
  double energy = 100.0;       ///< percent, clamped to [0, 100]
  double load = 0.0;           ///< units carried, <= capacity
  Phase phase = Phase::Idle;
  double per_step_energy = 0.0;
  double capacity = 0.0;
  double sense_range = 0.0;    ///< may be +inf
  double charge_threshold = 30.0;
  double charge_duration = 10.0;

  DwellKind dwell = DwellKind::None;
  double dwell_remaining = 0.0;

  double energy_spent = 0.0;
  double rescued = 0.0;
  long rounds = 0;
  std::vector<std::uint8_t> inside_obstacle;
};

enum class EventKind {
  Move, Hold, Conflict, Load, Unload, ChargeBegin, ChargeEnd, Obstacle
};

/// One trace entry. Rendered as
///   t=<sec> robot=<id> event=<kind> value=<v>
/// where value carries the load amount (load/unload), the peer id
/// (conflict) or zero.
struct Event {
  double t = 0.0;
  int robot = -1;
  EventKind kind = EventKind::Move;
  double value = 0.0;
};

std::string to_line(const Event& event);

struct WorldState {
  Scenario scenario;  ///< effective setup; cooperation speeds already applied
  double clock = 0.0;
  std::vector<RobotState> robots;
  std::vector<bt::Blackboard> boards;
  std::optional<double> victims_remaining;  ///< nullopt = unbounded supply
  double rescued_total = 0.0;
  long rounds_completed = 0;
  std::vector<bt::PerceivedObstacle> obstacles;
  std::mt19937_64 rng;

  bool record_events = false;
  std::vector<Event> events;
};

/// A robot's movement wish for one step, the unit negotiated over.
struct MovementProposal {
  int robot_id = -1;
  Vec2 current;
  Vec2 proposed;
  double energy = 0.0;  ///< priority key: more energy wins, then lower id
  bool stationary = false;
};

/// Resolves movement conflicts: any pair of resulting positions closer
/// than `safety_radius` is a conflict; the lower-priority mover is demoted
/// to holding its position, and a mover always yields to a stationary
/// robot. Pairwise demotion repeats until the output is conflict-free.
std::vector<MovementProposal> negotiate_conflicts(
    std::vector<MovementProposal> proposals, double safety_radius);

struct RobotTrialStats {
  int id = 0;
  RobotClass cls = RobotClass::Carrier;
  double rescued = 0.0;
  double energy_spent = 0.0;
  long rounds = 0;
};

struct TrialMetrics {
  double rescued_units = 0.0;
  double total_energy_spent = 0.0;
  /// total_energy_spent / rescued_units; empty when nothing was rescued.
  std::optional<double> energy_per_unit;
  long rounds_completed = 0;
  std::vector<RobotTrialStats> per_robot;
};

/// Places sites, spawns the composition around the shelter with pairwise
/// safety separation, scatters obstacles, and initializes every robot at
/// full energy. Identical (scenario, seed) produce identical worlds.
WorldState build_world(const Scenario& scenario, std::uint64_t seed);

/// One two-phase step: every robot ticks its needs tree to produce an
/// intent, conflicts are negotiated, then all mutations apply atomically.
void step(WorldState& world, double dt);

/// Builds a world and steps it until the scenario duration elapses.
TrialMetrics run_trial(const Scenario& scenario, std::uint64_t seed,
                       bool record_events = false,
                       std::vector<Event>* events_out = nullptr);

/// Metrics snapshot of a world (used by run_trial and by tests that drive
/// step() directly).
TrialMetrics collect_metrics(const WorldState& world);

}  // namespace sar::sim
