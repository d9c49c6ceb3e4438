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

#include "sar/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace sar {

namespace {

void require(bool ok, const std::string& field, const std::string& what) {
  if (!ok) throw std::invalid_argument("scenario field '" + field + "': " + what);
}

void validate_class(const ClassSetup& c, const std::string& prefix) {
  require(c.count >= 0, prefix + ".count", "must be non-negative");
  require(c.velocity > 0 && std::isfinite(c.velocity), prefix + ".velocity",
          "must be positive and finite");
  require(c.sense_range > 0, prefix + ".sense_range", "must be positive");
  require(c.step_energy >= 0 && std::isfinite(c.step_energy), prefix + ".step_energy",
          "must be non-negative");
  require(c.capacity >= 0 && std::isfinite(c.capacity), prefix + ".capacity",
          "must be non-negative");
  require(c.charge_threshold >= 0 && c.charge_threshold <= 100,
          prefix + ".charge_threshold", "must be within [0, 100]");
  require(c.charge_duration_s >= 0 && std::isfinite(c.charge_duration_s),
          prefix + ".charge_duration_s", "must be non-negative");
}

}  // namespace

void validate(const Scenario& s) {
  require(!s.name.empty(), "name", "must not be empty");
  require(s.duration_s > 0 && std::isfinite(s.duration_s), "duration_s",
          "must be positive and finite");
  require(s.dt_s > 0 && std::isfinite(s.dt_s), "dt_s", "must be positive and finite");
  require(s.dt_s <= s.duration_s, "dt_s", "must not exceed duration_s");

  validate_class(s.carrier, "carrier");
  validate_class(s.supplier, "supplier");
  validate_class(s.observer, "observer");
  require(s.total_robots() >= 1, "counts", "the composition must contain at least one robot");

  require(s.safety_radius > 0, "safety_radius", "must be positive");
  require(s.arrive_radius > s.safety_radius, "arrive_radius",
          "must exceed safety_radius");
  require(s.spawn_radius > 0, "spawn_radius", "must be positive");
  require(s.handling_s >= 0, "handling_s", "must be non-negative");
  require(s.load_energy >= 0, "load_energy", "must be non-negative");
  require(s.lane_offset >= 0, "lane_offset", "must be non-negative");

  int max_lane = 0;
  if (s.carrier.count > 0) max_lane = std::max(max_lane, 1);
  if (s.observer.count > 0) max_lane = std::max(max_lane, 2);
  if (s.supplier.count > 0) max_lane = std::max(max_lane, 3);
  require(max_lane * s.lane_offset < s.arrive_radius, "lane_offset",
          "lane displacement must stay inside arrive_radius");

  const double site_min = 2.0 * s.arrive_radius;
  require(distance(s.shelter, s.rescue_site) > site_min, "rescue_site",
          "site placements overlap");
  require(distance(s.shelter, s.charge_station) > site_min, "charge_station",
          "site placements overlap");
  require(distance(s.rescue_site, s.charge_station) > site_min, "charge_station",
          "site placements overlap");

  if (s.victims) require(*s.victims >= 0, "victims", "must be non-negative");

  require(s.obstacle_count >= 0, "obstacle.count", "must be non-negative");
  require(s.obstacle_rate_coeff > 0, "obstacle.rate_coeff", "must be positive");
  require(s.obstacle_tackle_s >= 0, "obstacle.tackle_s", "must be non-negative");
  require(s.obstacle_tackle_energy >= 0, "obstacle.tackle_energy", "must be non-negative");
  if (s.obstacle_count > 0)
    require(s.obstacle_radius > 0, "obstacle.radius", "must be positive");
}

}  // namespace sar
