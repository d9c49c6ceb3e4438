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

#include <optional>
#include <string>
#include <vector>

#include "sar/geometry.hpp"
#include "sar/types.hpp"

namespace sar::bt {

enum class IntentPurpose { Task, Charge, Evade };

/// What a robot wants from the world this tick. Absence of an intent means
/// the robot stays where it is.
struct MoveIntent {
  Vec2 target;  ///< point to step toward at the robot's speed
  IntentPurpose purpose = IntentPurpose::Task;
};

/// What the robot is shuttling toward.
enum class TaskGoal { None, ToSite, ToShelter };

struct PerceivedNeighbor {
  int id = -1;
  RobotClass cls = RobotClass::Carrier;
  bool carrying = false;
  Vec2 position;
  double dist = 0.0;
};

struct PerceivedObstacle {
  Vec2 position;
  double radius = 0.0;
};

/// Per-robot working memory a needs tree ticks against. The simulator
/// refreshes the snapshot section each tick; the pipeline products persist
/// between ticks until invalidated by world events.
struct Blackboard {
  // Robot snapshot.
  int robot_id = -1;
  RobotClass cls = RobotClass::Carrier;
  Vec2 position;
  double velocity = 1.0;
  double energy = 100.0;  ///< percent
  double load = 0.0;
  double capacity = 0.0;
  bool charging = false;
  bool busy = false;  ///< mid-dwell (handling a pickup or tackling an obstacle)
  bool at_charge_station = false;
  double charge_threshold = 30.0;
  double clock = 0.0;

  // Perception products.
  std::vector<PerceivedNeighbor> neighbors;
  std::vector<PerceivedObstacle> nearby_obstacles;
  Vec2 site_position;
  Vec2 shelter_position;
  Vec2 charge_position;
  bool victims_available = true;
  double collision_warn_radius = 0.0;  ///< distance that trips the safety stage
  double lane_displacement = 0.0;      ///< lateral route offset for this robot
  double service_radius = 0.0;         ///< departure-hop reach around endpoints
  double step_length = 0.0;            ///< distance covered in one tick

  // Teaming pipeline products, invalidated by the world on task changes.
  TaskGoal task = TaskGoal::None;
  bool task_current = false;
  std::vector<Vec2> route;      ///< waypoints; the last one is the task goal
  std::size_t route_index = 0;  ///< advanced by the world on waypoint arrival
  bool route_current = false;
  bool intent_announced = false;

  // Negotiation exchange.
  bool held_last_tick = false;   ///< inbox: lost a conflict last step
  int consecutive_holds = 0;     ///< ticks spent blocked in a row
  int consecutive_yields = 0;    ///< ticks spent waiting in an approach queue
  std::optional<MoveIntent> intent;  ///< outbox: this tick's movement wish

  // Active evasive leg, maintained by the safety stage.
  Vec2 evade_heading;
  double evade_remaining = 0.0;
  int evade_spins = 0;

  // Tick bookkeeping for tests and traces.
  std::vector<std::string> executed_actions;  ///< actions that did work this tick
  std::vector<std::string> diagnostics;

  void begin_tick() {
    intent.reset();
    executed_actions.clear();
  }

  void invalidate_task() {
    task_current = false;
    route_current = false;
    intent_announced = false;
    route.clear();
    route_index = 0;
  }
};

}  // namespace sar::bt
