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

#include "sar/bt/behavior_tree.hpp"

#include <sstream>
#include <stdexcept>

namespace sar::bt {

std::string to_string(NodeStatus s) {
  switch (s) {
    case NodeStatus::Success: return "success";
    case NodeStatus::Failure: return "failure";
    case NodeStatus::Running: return "running";
  }
  return "unknown";
}

Node Node::selector(std::string label, std::vector<Node> children) {
  if (children.empty()) throw std::invalid_argument("selector needs at least one child");
  Node n;
  n.kind = Kind::Selector;
  n.name = std::move(label);
  n.children = std::move(children);
  return n;
}

Node Node::sequence(std::string label, std::vector<Node> children) {
  if (children.empty()) throw std::invalid_argument("sequence needs at least one child");
  Node n;
  n.kind = Kind::Sequence;
  n.name = std::move(label);
  n.children = std::move(children);
  return n;
}

Node Node::condition(std::string name) {
  Node n;
  n.kind = Kind::Condition;
  n.name = std::move(name);
  return n;
}

Node Node::action(std::string name) {
  Node n;
  n.kind = Kind::Action;
  n.name = std::move(name);
  return n;
}

void Registry::add_predicate(std::string name, Predicate fn) {
  predicates_[std::move(name)] = std::move(fn);
}

void Registry::add_action(std::string name, ActionFn fn) {
  actions_[std::move(name)] = std::move(fn);
}

const Predicate* Registry::find_predicate(const std::string& name) const {
  auto it = predicates_.find(name);
  return it == predicates_.end() ? nullptr : &it->second;
}

const ActionFn* Registry::find_action(const std::string& name) const {
  auto it = actions_.find(name);
  return it == actions_.end() ? nullptr : &it->second;
}

bool Registry::has(const std::string& name) const {
  return predicates_.count(name) > 0 || actions_.count(name) > 0;
}

NodeStatus tick(const Node& node, const Registry& registry, Blackboard& board) {
  switch (node.kind) {
    case Node::Kind::Selector:
      for (const Node& child : node.children) {
        const NodeStatus s = tick(child, registry, board);
        if (s != NodeStatus::Failure) return s;
      }
      return NodeStatus::Failure;

    case Node::Kind::Sequence:
      for (const Node& child : node.children) {
        const NodeStatus s = tick(child, registry, board);
        if (s != NodeStatus::Success) return s;
      }
      return NodeStatus::Success;

    case Node::Kind::Condition: {
      const Predicate* pred = registry.find_predicate(node.name);
      if (pred == nullptr) {
        board.diagnostics.push_back("unknown predicate '" + node.name + "'");
        return NodeStatus::Failure;
      }
      return (*pred)(board) ? NodeStatus::Success : NodeStatus::Failure;
    }

    case Node::Kind::Action: {
      const ActionFn* action = registry.find_action(node.name);
      if (action == nullptr) {
        board.diagnostics.push_back("unknown action '" + node.name + "'");
        return NodeStatus::Failure;
      }
      return (*action)(board);
    }
  }
  return NodeStatus::Failure;
}

namespace {

void dump_node(const Node& node, int depth, std::ostringstream& os) {
  os << std::string(static_cast<std::size_t>(depth) * 2, ' ');
  switch (node.kind) {
    case Node::Kind::Selector: os << "[?] " << node.name; break;
    case Node::Kind::Sequence: os << "[->] " << node.name; break;
    case Node::Kind::Condition: os << "(cond) " << node.name; break;
    case Node::Kind::Action: os << "(act) " << node.name; break;
  }
  os << "\n";
  for (const Node& child : node.children) dump_node(child, depth + 1, os);
}

}  // namespace

std::string dump_tree(const Node& node) {
  std::ostringstream os;
  dump_node(node, 0, os);
  return os.str();
}

NeedsTreeConfig default_needs_config() {
  NeedsTreeConfig c;
  c.perception_action = "perceive";
  c.safety_condition = "path_clear";
  c.safety_action = "evade";
  c.energy_condition = "energy_sufficient";
  c.charge_action = "recharge";
  c.capability_condition = "task_feasible";
  c.capability_action = "request_reassignment";
  c.utility_action = "assess_utility";
  c.plan_action = "plan_route";
  c.negotiation_action = "announce_intent";
  c.execution_action = "commit_move";
  return c;
}

void register_builtin_bindings(Registry& registry) {
  if (!registry.has(kLearningPlaceholder))
    registry.add_predicate(kLearningPlaceholder, [](Blackboard&) { return true; });
}

Node build_needs_tree(const NeedsTreeConfig& config, const Registry& registry) {
  struct Stage {
    const char* stage;
    const std::string* name;
    bool is_action;
  };
  const Stage stages[] = {
      {"perception", &config.perception_action, true},
      {"safety", &config.safety_condition, false},
      {"safety", &config.safety_action, true},
      {"basic-needs", &config.energy_condition, false},
      {"basic-needs", &config.charge_action, true},
      {"capability", &config.capability_condition, false},
      {"capability", &config.capability_action, true},
      {"teaming", &config.utility_action, true},
      {"teaming", &config.plan_action, true},
      {"teaming", &config.negotiation_action, true},
      {"teaming", &config.execution_action, true},
  };
  for (const Stage& s : stages) {
    if (s.name->empty())
      throw std::invalid_argument(std::string("needs tree config: missing binding for the ") +
                                  s.stage + " stage");
    const bool bound = s.is_action ? registry.find_action(*s.name) != nullptr
                                   : registry.find_predicate(*s.name) != nullptr;
    if (!bound)
      throw std::invalid_argument(std::string("needs tree config: '") + *s.name +
                                  "' is not registered for the " + s.stage + " stage");
  }
  if (registry.find_predicate(kLearningPlaceholder) == nullptr)
    throw std::invalid_argument(
        "needs tree config: learning placeholder predicate is not registered");

  return Node::sequence(
      "needs",
      {
          Node::action(config.perception_action),
          Node::selector("safety", {Node::condition(config.safety_condition),
                                    Node::action(config.safety_action)}),
          Node::selector("basic_needs", {Node::condition(config.energy_condition),
                                         Node::action(config.charge_action)}),
          Node::selector("capability", {Node::condition(config.capability_condition),
                                        Node::action(config.capability_action)}),
          Node::sequence("teaming", {Node::action(config.utility_action),
                                     Node::action(config.plan_action),
                                     Node::action(config.negotiation_action),
                                     Node::action(config.execution_action)}),
          Node::condition(kLearningPlaceholder),
      });
}

}  // namespace sar::bt
