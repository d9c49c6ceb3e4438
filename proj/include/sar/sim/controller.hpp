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

#include "sar/bt/behavior_tree.hpp"

namespace sar::sim {

/// Predicate and action bindings that drive a shuttle robot: perceive,
/// evade, recharge, reassign, and the four-step teaming pipeline.
const bt::Registry& shuttle_registry();

/// The needs-hierarchy tree over shuttle_registry(). One shared immutable
/// instance; each robot keeps its own blackboard.
const bt::Node& shuttle_needs_tree();

/// Lateral lane displacement for a class, in multiples of the scenario's
/// lane_offset. Opposite directions use opposite signs.
int lane_index(RobotClass cls);

}  // namespace sar::sim
