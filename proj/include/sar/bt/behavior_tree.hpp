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

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "sar/bt/blackboard.hpp"

namespace sar::bt {

enum class NodeStatus { Success, Failure, Running };

std::string to_string(NodeStatus s);

/// A behavior-tree node. Selector and Sequence carry children; Condition
/// and Action are leaves bound by name through a Registry at tick time.
struct Node {
  enum class Kind { Selector, Sequence, Condition, Action };

  Kind kind = Kind::Sequence;
  std::string name;            ///< binding name for leaves, label otherwise
  std::vector<Node> children;  ///< empty for leaves

  static Node selector(std::string label, std::vector<Node> children);
  static Node sequence(std::string label, std::vector<Node> children);
  static Node condition(std::string name);
  static Node action(std::string name);
};

/// Predicates answer a question about the board; actions may do work. By
/// convention an action returns Running while its work is in progress this
/// tick and Success when its product is already current, so a tick executes
/// at most one unit of work.
using Predicate = std::function<bool(Blackboard&)>;
using ActionFn = std::function<NodeStatus(Blackboard&)>;

class Registry {
 public:
  void add_predicate(std::string name, Predicate fn);
  void add_action(std::string name, ActionFn fn);
  const Predicate* find_predicate(const std::string& name) const;
  const ActionFn* find_action(const std::string& name) const;
  bool has(const std::string& name) const;

 private:
  std::map<std::string, Predicate> predicates_;
  std::map<std::string, ActionFn> actions_;
};

/// Stateless tick from the root. Selector returns the first non-Failure
/// child status, Sequence the first non-Success child status. Leaves with
/// unbound names fail the tick and record a diagnostic on the board.
NodeStatus tick(const Node& node, const Registry& registry, Blackboard& board);

/// Indented structure dump for debugging.
std::string dump_tree(const Node& node);

/// Bindings for the eight stages of the needs hierarchy. The three guarded
/// stages pair a condition with a fallback action.
struct NeedsTreeConfig {
  std::string perception_action;

  std::string safety_condition;
  std::string safety_action;

  std::string energy_condition;
  std::string charge_action;

  std::string capability_condition;
  std::string capability_action;

  std::string utility_action;
  std::string plan_action;
  std::string negotiation_action;
  std::string execution_action;
};

/// Shipped binding names used by the simulator's robot controller.
NeedsTreeConfig default_needs_config();

/// Builds the needs-hierarchy tree: a root sequence of perception, the
/// safety / basic-needs / capability guard stages, the four-step teaming
/// sequence, and an inert placeholder leaf for the learning level. Every
/// stage binding must name an entry present in `registry`; a missing or
/// unbound stage raises std::invalid_argument.
Node build_needs_tree(const NeedsTreeConfig& config, const Registry& registry);

/// Name of the always-true placeholder predicate registered for the
/// learning level.
inline constexpr const char* kLearningPlaceholder = "learning_placeholder";

/// Registers the learning placeholder into `registry` (idempotent).
void register_builtin_bindings(Registry& registry);

}  // namespace sar::bt
