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

#include <limits>
#include <optional>
#include <string>

#include "sar/geometry.hpp"
#include "sar/types.hpp"

namespace sar {

/// Per-class simulation parameters.
struct ClassSetup {
  int count = 0;
  double velocity = 1.0;          ///< distance units per second
  double sense_range = 6.0;       ///< may be +inf
  double step_energy = 0.045;     ///< percent per moving tick
  double capacity = 8.0;          ///< units per round
  double charge_threshold = 30.0; ///< percent
  double charge_duration_s = 10.0;

  bool operator==(const ClassSetup&) const = default;
};

/// A complete runnable world description.
struct Scenario {
  std::string name = "scenario";
  double duration_s = 300.0;
  double dt_s = 0.1;
  bool cooperation = false;  ///< doubles carrier speed, halves observer speed

  ClassSetup carrier;
  ClassSetup supplier;
  ClassSetup observer;

  Vec2 shelter{0.0, 0.0};
  Vec2 rescue_site{38.0, 0.0};
  Vec2 charge_station{0.0, -12.0};

  /// Victim pool; nullopt means an unbounded supply.
  std::optional<long> victims;

  // Obstacle block; count 0 disables the machinery.
  int obstacle_count = 0;
  double obstacle_rate_coeff = 1.0;  ///< encounter coefficient c
  double obstacle_tackle_s = 0.5;    ///< time lost per encounter
  double obstacle_tackle_energy = 0.2;
  double obstacle_radius = 1.0;

  // Motion and service geometry.
  double safety_radius = 0.6;   ///< minimum robot separation
  double arrive_radius = 2.5;   ///< service zone radius around each site
  double lane_offset = 0.75;    ///< lateral lane spacing between flows
  double spawn_radius = 4.0;    ///< spawn disc around the shelter
  double handling_s = 1.0;      ///< dwell while picking up at the site
  double load_energy = 9.0;     ///< percent per pickup stop

  const ClassSetup& setup(RobotClass cls) const {
    switch (cls) {
      case RobotClass::Carrier: return carrier;
      case RobotClass::Supplier: return supplier;
      case RobotClass::Observer: return observer;
    }
    return carrier;
  }

  int total_robots() const { return carrier.count + supplier.count + observer.count; }

  bool operator==(const Scenario&) const = default;
};

/// Throws std::invalid_argument naming the offending field.
void validate(const Scenario& scenario);

}  // namespace sar
