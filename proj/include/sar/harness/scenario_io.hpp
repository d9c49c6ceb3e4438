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

#include <string>
#include <vector>

#include "sar/scenario.hpp"
#include "sar/types.hpp"

namespace sar::harness {

/// Parses the line-oriented scenario format: one `key value...` directive
/// per line, `#` comments, omitted keys filled from the shipped defaults.
/// Malformed syntax, unknown keys and bad values raise std::runtime_error
/// with `<origin>:<line>` diagnostics; range violations raise
/// std::invalid_argument naming the field.
Scenario parse_scenario(const std::string& text, const std::string& origin);

/// Reads and parses a scenario file.
Scenario load_scenario(const std::string& path);

/// A mission description plus the capability profiles it was stated
/// against (defaults unless the file overrides them).
struct MissionFile {
  MissionSpec mission;
  ProfileSet profiles;
};

MissionFile parse_mission(const std::string& text, const std::string& origin);
MissionFile load_mission(const std::string& path);

/// One shipped scenario: file stem plus full file text.
struct ShippedScenario {
  std::string stem;
  std::string text;
};

/// The four reproduction scenarios (homogeneous carriers, homogeneous
/// observers, heterogeneous non-cooperative, heterogeneous cooperative).
const std::vector<ShippedScenario>& shipped_scenarios();

/// Parsed forms of shipped_scenarios(), in the same order.
std::vector<Scenario> default_scenarios();

}  // namespace sar::harness
