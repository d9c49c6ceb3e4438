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

#include "sar/sim/controller.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace sar::sim {

namespace {

using bt::Blackboard;
using bt::IntentPurpose;
using bt::MoveIntent;
using bt::NodeStatus;
using bt::TaskGoal;

// Blocked three ticks in a row inside a crowd counts as an imminent
// collision: the safety stage then commits to a lateral detour leg, which
// dissolves multi-robot knots around the service points.
constexpr int kStuckTicks = 3;

Vec2 rotate(Vec2 v, double angle) {
  return {v.x * std::cos(angle) - v.y * std::sin(angle),
          v.x * std::sin(angle) + v.y * std::cos(angle)};
}

bool path_clear(Blackboard& board) {
  if (board.charging || board.busy) return true;  // docked
  if (board.evade_remaining > 0.0) return false;  // finish the detour leg
  double nearest = std::numeric_limits<double>::infinity();
  for (const auto& nb : board.neighbors) nearest = std::min(nearest, nb.dist);
  if (nearest < board.collision_warn_radius) return false;
  // Blocking interactions reach two step lengths plus the warn distance.
  const double crowd = 2.0 * board.step_length + 3.0 * board.collision_warn_radius;
  if (board.consecutive_holds >= kStuckTicks && nearest < crowd) return false;
  board.evade_spins = 0;
  return true;
}

NodeStatus evade(Blackboard& board) {
  if (board.evade_remaining <= 0.0) {
    const bt::PerceivedNeighbor* nearest = nullptr;
    for (const auto& nb : board.neighbors)
      if (nearest == nullptr || nb.dist < nearest->dist) nearest = &nb;

    // Detour sideways relative to where we were trying to go, picking the
    // side away from the blocker; spin further on repeated failures.
    Vec2 ahead{1.0, 0.0};
    if (board.route_index < board.route.size()) {
      const Vec2 d = board.route[board.route_index] - board.position;
      if (d.norm() > 0.0) ahead = d * (1.0 / d.norm());
    } else if (nearest != nullptr && nearest->dist > 0.0) {
      ahead = (board.position - nearest->position) * (1.0 / nearest->dist);
    }
    double side = M_PI / 2.0;
    if (nearest != nullptr) {
      const Vec2 to_nb = nearest->position - board.position;
      if (ahead.x * to_nb.y - ahead.y * to_nb.x > 0.0) side = -side;
    }
    board.evade_heading = rotate(ahead, side + board.evade_spins * (M_PI / 4.0));
    board.evade_remaining =
        3.0 * board.collision_warn_radius + 2.0 * board.step_length;
    board.evade_spins += 1;
  }

  board.intent = MoveIntent{board.position + board.evade_heading * board.evade_remaining,
                            IntentPurpose::Evade};
  board.evade_remaining -= board.step_length;
  board.executed_actions.push_back("evade");
  return NodeStatus::Running;
}

bool energy_sufficient(Blackboard& board) {
  return !board.charging && board.energy >= board.charge_threshold;
}

NodeStatus recharge(Blackboard& board) {
  board.executed_actions.push_back("recharge");
  if (board.charging || board.busy) return NodeStatus::Running;  // holding at the station
  board.intent = MoveIntent{board.charge_position, IntentPurpose::Charge};
  return NodeStatus::Running;
}

bool task_feasible(Blackboard& board) { return board.capacity > 0.0; }

NodeStatus request_reassignment(Blackboard& board) {
  board.executed_actions.push_back("request_reassignment");
  board.diagnostics.push_back("robot " + std::to_string(board.robot_id) +
                              " requests reassignment");
  return NodeStatus::Running;
}

NodeStatus noop_perceive(Blackboard&) {
  // The world refreshes the snapshot before each tick; this slot only
  // anchors the perception stage.
  return NodeStatus::Success;
}

NodeStatus assess_utility(Blackboard& board) {
  if (board.task_current) return NodeStatus::Success;
  if (board.load > 0.0)
    board.task = TaskGoal::ToShelter;
  else if (board.victims_available)
    board.task = TaskGoal::ToSite;
  else
    board.task = TaskGoal::None;
  board.task_current = true;
  board.executed_actions.push_back("assess_utility");
  return NodeStatus::Running;
}

NodeStatus plan_route(Blackboard& board) {
  if (board.task == TaskGoal::None) return NodeStatus::Success;
  if (board.route_current) return NodeStatus::Success;

  // Lanes hang off the fixed shelter-site axis: outbound traffic keeps to
  // one side, inbound to the other, so opposing flows never meet head-on.
  // Each class loads and unloads at its own lane-side service point, and a
  // departing robot first hops to the opposite side of the endpoint before
  // heading out, clearing the queue that is still arriving.
  const Vec2 axis = board.site_position - board.shelter_position;
  const double len = axis.norm();
  Vec2 perp{0.0, 1.0};
  if (len > 0.0) perp = Vec2{-axis.y / len, axis.x / len};
  const Vec2 out_side = perp * board.lane_displacement;

  board.route.clear();
  board.route_index = 0;
  if (board.task == TaskGoal::ToSite) {
    if (distance(board.position, board.shelter_position) <= board.service_radius)
      board.route.push_back(board.shelter_position + out_side);  // departure hop
    board.route.push_back(board.site_position + out_side);
  } else {
    if (distance(board.position, board.site_position) <= board.service_radius)
      board.route.push_back(board.site_position - out_side);  // departure hop
    board.route.push_back(board.shelter_position - out_side);
  }
  board.route_current = true;
  board.executed_actions.push_back("plan_route");
  return NodeStatus::Running;
}

NodeStatus announce_intent(Blackboard& board) {
  if (board.task == TaskGoal::None) return NodeStatus::Success;
  if (board.intent_announced) return NodeStatus::Success;
  board.intent_announced = true;
  board.executed_actions.push_back("announce_intent");
  return NodeStatus::Running;
}

NodeStatus commit_move(Blackboard& board) {
  if (board.task == TaskGoal::None) return NodeStatus::Success;
  if (board.busy) return NodeStatus::Running;  // handling at the site
  if (board.route_index >= board.route.size()) return NodeStatus::Failure;
  const Vec2 target = board.route[board.route_index];

  // Approach queue: inside the service area, whoever of the same class and
  // flow direction is closest to the shared service point goes first;
  // everyone else waits in place until it clears. Departing robots and
  // other classes use different points and are left to the negotiation.
  // Patience is bounded so a parked peer cannot starve the queue.
  const double own_d = distance(board.position, target);
  const int patience =
      static_cast<int>(5.0 * board.velocity / std::max(board.step_length, 1e-9));
  if (own_d <= board.service_radius && board.consecutive_yields < patience) {
    const bool carrying = board.load > 0.0;
    for (const auto& nb : board.neighbors) {
      if (nb.cls != board.cls || nb.carrying != carrying) continue;
      const double nb_d = distance(nb.position, target);
      if (nb_d < own_d || (nb_d == own_d && nb.id < board.robot_id)) {
        ++board.consecutive_yields;
        return NodeStatus::Running;  // hold this tick
      }
    }
  }
  board.consecutive_yields = 0;

  board.intent = MoveIntent{target, IntentPurpose::Task};
  board.executed_actions.push_back("commit_move");
  return NodeStatus::Running;
}

bt::Registry make_registry() {
  bt::Registry reg;
  reg.add_action("perceive", noop_perceive);
  reg.add_predicate("path_clear", path_clear);
  reg.add_action("evade", evade);
  reg.add_predicate("energy_sufficient", energy_sufficient);
  reg.add_action("recharge", recharge);
  reg.add_predicate("task_feasible", task_feasible);
  reg.add_action("request_reassignment", request_reassignment);
  reg.add_action("assess_utility", assess_utility);
  reg.add_action("plan_route", plan_route);
  reg.add_action("announce_intent", announce_intent);
  reg.add_action("commit_move", commit_move);
  bt::register_builtin_bindings(reg);
  return reg;
}

}  // namespace

const bt::Registry& shuttle_registry() {
  static const bt::Registry registry = make_registry();
  return registry;
}

const bt::Node& shuttle_needs_tree() {
  static const bt::Node tree =
      bt::build_needs_tree(bt::default_needs_config(), shuttle_registry());
  return tree;
}

int lane_index(RobotClass cls) {
  switch (cls) {
    case RobotClass::Carrier: return 1;
    case RobotClass::Observer: return 2;
    case RobotClass::Supplier: return 3;
  }
  return 1;
}

}  // namespace sar::sim
