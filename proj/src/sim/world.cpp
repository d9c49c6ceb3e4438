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

#include "sar/sim/world.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "sar/sim/controller.hpp"

namespace sar::sim {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Proximity that counts as reaching a waypoint or service point. Kept well
// under the safety radius so a service point admits one robot at a time.
constexpr double kWaypointEps = 0.35;

const char* event_name(EventKind k) {
  switch (k) {
    case EventKind::Move: return "move";
    case EventKind::Hold: return "hold";
    case EventKind::Conflict: return "conflict";
    case EventKind::Load: return "load";
    case EventKind::Unload: return "unload";
    case EventKind::ChargeBegin: return "charge_begin";
    case EventKind::ChargeEnd: return "charge_end";
    case EventKind::Obstacle: return "obstacle";
  }
  return "unknown";
}

void record(WorldState& w, int robot, EventKind kind, double value = 0.0) {
  if (w.record_events) w.events.push_back({w.clock, robot, kind, value});
}

/// Deducts up to `amount` percent from the battery, clamping at zero, and
/// accrues the actual deduction into the spent counter.
void spend_battery(RobotState& r, double amount) {
  const double spent = std::min(amount, r.energy);
  r.energy -= spent;
  r.energy_spent += spent;
}

bool within(Vec2 pos, Vec2 center, double radius) {
  return distance(pos, center) <= radius;
}

void sync_board(const WorldState& w, const std::vector<Vec2>& positions,
                const RobotState& r, double dt, bt::Blackboard& b) {
  const Scenario& sc = w.scenario;
  b.robot_id = r.id;
  b.cls = r.cls;
  b.position = r.position;
  b.velocity = r.velocity_cap;
  b.energy = r.energy;
  b.load = r.load;
  b.capacity = r.capacity;
  b.charging = r.dwell == DwellKind::Charging;
  b.busy = r.dwell == DwellKind::Rescuing || r.dwell == DwellKind::Obstacle;
  b.at_charge_station = within(r.position, sc.charge_station, kWaypointEps);
  b.charge_threshold = r.charge_threshold;
  b.clock = w.clock;
  b.site_position = sc.rescue_site;
  b.shelter_position = sc.shelter;
  b.charge_position = sc.charge_station;
  b.victims_available = !w.victims_remaining || *w.victims_remaining > 0.0;
  b.collision_warn_radius = sc.safety_radius * 0.5;
  b.lane_displacement = lane_index(r.cls) * sc.lane_offset;
  b.service_radius = sc.arrive_radius;
  b.step_length = r.velocity_cap * dt;

  b.neighbors.clear();
  for (const RobotState& other : w.robots) {
    if (other.id == r.id) continue;
    const double d = distance(positions[static_cast<std::size_t>(other.id)], r.position);
    if (d <= r.sense_range)
      b.neighbors.push_back({other.id, other.cls, other.load > 0.0,
                             positions[static_cast<std::size_t>(other.id)], d});
  }
  b.nearby_obstacles.clear();
  for (const bt::PerceivedObstacle& obs : w.obstacles)
    if (distance(obs.position, r.position) <= r.sense_range)
      b.nearby_obstacles.push_back(obs);
}

void complete_dwell(WorldState& w, RobotState& r, bt::Blackboard& b) {
  const Scenario& sc = w.scenario;
  switch (r.dwell) {
    case DwellKind::Rescuing: {
      const double available =
          w.victims_remaining ? *w.victims_remaining : kInf;
      const double amount = std::min(r.capacity - r.load, available);
      if (amount > 0.0) {
        r.load += amount;
        if (w.victims_remaining) *w.victims_remaining -= amount;
        // Handling overhead is powered at the site: it counts toward the
        // mission's energy books but does not drain the battery.
        r.energy_spent += sc.load_energy;
        record(w, r.id, EventKind::Load, amount);
      }
      break;
    }
    case DwellKind::Charging:
      r.energy = 100.0;
      record(w, r.id, EventKind::ChargeEnd);
      break;
    case DwellKind::Obstacle:
    case DwellKind::None:
      // The robot resumes its route after tackling; nothing to re-plan.
      r.dwell = DwellKind::None;
      r.dwell_remaining = 0.0;
      return;
  }
  r.dwell = DwellKind::None;
  r.dwell_remaining = 0.0;
  r.phase = Phase::Idle;
  b.invalidate_task();
}

void check_obstacle_entries(WorldState& w, RobotState& r) {
  const Scenario& sc = w.scenario;
  for (std::size_t i = 0; i < w.obstacles.size(); ++i) {
    const bool inside =
        distance(r.position, w.obstacles[i].position) < w.obstacles[i].radius;
    if (inside && !r.inside_obstacle[i]) {
      r.inside_obstacle[i] = 1;
      spend_battery(r, sc.obstacle_tackle_energy);
      if (sc.obstacle_tackle_s > 0.0) {
        r.dwell = DwellKind::Obstacle;
        r.dwell_remaining += sc.obstacle_tackle_s;
      }
      record(w, r.id, EventKind::Obstacle);
    } else if (!inside) {
      r.inside_obstacle[i] = 0;
    }
  }
}

void handle_arrivals(WorldState& w, RobotState& r, bt::Blackboard& b) {
  const Scenario& sc = w.scenario;

  if (b.intent && b.intent->purpose == bt::IntentPurpose::Charge) {
    if (within(r.position, sc.charge_station, kWaypointEps)) {
      r.dwell = DwellKind::Charging;
      r.dwell_remaining = r.charge_duration;
      r.phase = Phase::Charging;
      b.invalidate_task();
      record(w, r.id, EventKind::ChargeBegin);
    } else {
      r.phase = Phase::ToCharge;
    }
    return;
  }

  if (b.task == bt::TaskGoal::None) {
    r.phase = Phase::Idle;
    return;
  }
  r.phase = b.task == bt::TaskGoal::ToSite ? Phase::ToSite : Phase::ToShelter;
  if (!b.route_current || b.route_index >= b.route.size()) return;
  if (!within(r.position, b.route[b.route_index], kWaypointEps)) return;

  if (b.route_index + 1 < b.route.size()) {
    ++b.route_index;  // cleared the departure hop
    return;
  }

  if (b.task == bt::TaskGoal::ToSite) {
    if (b.victims_available && r.load < r.capacity) {
      r.dwell = DwellKind::Rescuing;
      r.dwell_remaining = sc.handling_s;
      r.phase = Phase::Rescuing;
      if (sc.handling_s <= 0.0) complete_dwell(w, r, b);
    } else {
      b.invalidate_task();
      r.phase = Phase::Idle;
    }
  } else {
    w.rescued_total += r.load;
    r.rescued += r.load;
    r.rounds += 1;
    w.rounds_completed += 1;
    record(w, r.id, EventKind::Unload, r.load);
    r.load = 0.0;
    b.invalidate_task();
    r.phase = Phase::Unloading;
  }
}

/// The group forms up behind the shelter, clear of the service points.
Vec2 spawn_center(const Scenario& sc) {
  const Vec2 axis = sc.rescue_site - sc.shelter;
  const double len = axis.norm();
  const Vec2 dir = len > 0.0 ? axis * (1.0 / len) : Vec2{1.0, 0.0};
  return sc.shelter - dir * (sc.arrive_radius + sc.spawn_radius);
}

Vec2 sample_spawn_point(WorldState& w, const std::vector<Vec2>& placed) {
  const Scenario& sc = w.scenario;
  const Vec2 center = spawn_center(sc);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (int attempt = 0; attempt < 20000; ++attempt) {
    const Vec2 candidate = center + Vec2{unit(w.rng), unit(w.rng)} * sc.spawn_radius;
    if (distance(candidate, center) > sc.spawn_radius) continue;
    bool clear = true;
    for (const Vec2& other : placed)
      if (distance(candidate, other) < sc.safety_radius) {
        clear = false;
        break;
      }
    if (clear) return candidate;
  }
  throw std::runtime_error("build_world: spawn region too crowded for the composition");
}

}  // namespace

std::string to_line(const Event& event) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "t=%.3f robot=%d event=%s value=%g", event.t,
                event.robot, event_name(event.kind), event.value);
  return buf;
}

std::vector<MovementProposal> negotiate_conflicts(
    std::vector<MovementProposal> proposals, double safety_radius) {
  auto higher_priority = [](const MovementProposal& a, const MovementProposal& b) {
    if (a.energy != b.energy) return a.energy > b.energy;
    return a.robot_id < b.robot_id;
  };

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < proposals.size(); ++i) {
      for (std::size_t j = i + 1; j < proposals.size(); ++j) {
        MovementProposal& a = proposals[i];
        MovementProposal& b = proposals[j];
        if (distance(a.proposed, b.proposed) >= safety_radius) continue;
        if (a.stationary && b.stationary) continue;  // nothing left to demote
        MovementProposal* loser;
        if (a.stationary)
          loser = &b;
        else if (b.stationary)
          loser = &a;
        else
          loser = higher_priority(a, b) ? &b : &a;
        loser->proposed = loser->current;
        loser->stationary = true;
        changed = true;
      }
    }
  }
  return proposals;
}

WorldState build_world(const Scenario& scenario, std::uint64_t seed) {
  validate(scenario);

  WorldState w;
  w.scenario = scenario;
  if (scenario.cooperation) {
    w.scenario.carrier.velocity *= 2.0;
    w.scenario.observer.velocity *= 0.5;
  }
  w.rng.seed(seed);
  w.victims_remaining =
      scenario.victims ? std::optional<double>(static_cast<double>(*scenario.victims))
                       : std::nullopt;

  int next_id = 0;
  for (RobotClass cls : kAllClasses) {
    const ClassSetup& setup = w.scenario.setup(cls);
    for (int i = 0; i < setup.count; ++i) {
      RobotState r;
      r.id = next_id++;
      r.cls = cls;
      r.velocity_cap = setup.velocity;
      r.per_step_energy = setup.step_energy;
      r.capacity = setup.capacity;
      r.sense_range = setup.sense_range;
      r.charge_threshold = setup.charge_threshold;
      r.charge_duration = setup.charge_duration_s;
      r.energy = 100.0;
      r.phase = Phase::Idle;
      w.robots.push_back(r);
    }
  }
  std::vector<Vec2> placed;
  for (RobotState& r : w.robots) {
    r.position = sample_spawn_point(w, placed);
    placed.push_back(r.position);
  }

  if (scenario.obstacle_count > 0) {
    double lo_x = std::min({scenario.shelter.x, scenario.rescue_site.x, scenario.charge_station.x});
    double hi_x = std::max({scenario.shelter.x, scenario.rescue_site.x, scenario.charge_station.x});
    double lo_y = std::min({scenario.shelter.y, scenario.rescue_site.y, scenario.charge_station.y});
    double hi_y = std::max({scenario.shelter.y, scenario.rescue_site.y, scenario.charge_station.y});
    const double margin = scenario.spawn_radius + scenario.obstacle_radius;
    std::uniform_real_distribution<double> ux(lo_x - margin, hi_x + margin);
    std::uniform_real_distribution<double> uy(lo_y - margin, hi_y + margin);
    for (int i = 0; i < scenario.obstacle_count; ++i)
      w.obstacles.push_back({{ux(w.rng), uy(w.rng)}, scenario.obstacle_radius});
  }
  for (RobotState& r : w.robots)
    r.inside_obstacle.assign(w.obstacles.size(), 0);

  w.boards.resize(w.robots.size());
  return w;
}

void step(WorldState& w, double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("step: dt must be positive");

  // Phase 1: every robot ticks its needs tree against the pre-step state.
  std::vector<Vec2> positions;
  positions.reserve(w.robots.size());
  for (const RobotState& r : w.robots) positions.push_back(r.position);

  for (RobotState& r : w.robots) {
    bt::Blackboard& b = w.boards[static_cast<std::size_t>(r.id)];
    sync_board(w, positions, r, dt, b);
    b.begin_tick();
    bt::tick(shuttle_needs_tree(), shuttle_registry(), b);
  }

  // Phase 2a: negotiate movement conflicts.
  std::vector<MovementProposal> proposals;
  proposals.reserve(w.robots.size());
  for (RobotState& r : w.robots) {
    const bt::Blackboard& b = w.boards[static_cast<std::size_t>(r.id)];
    MovementProposal p{r.id, r.position, r.position, r.energy, true};
    if (r.dwell == DwellKind::None && b.intent && r.energy > 0.0) {
      p.proposed = step_toward(r.position, b.intent->target, r.velocity_cap * dt);
      p.stationary = distance(p.proposed, r.position) == 0.0;
    }
    proposals.push_back(p);
  }
  const std::vector<MovementProposal> resolved =
      negotiate_conflicts(proposals, w.scenario.safety_radius);

  // Phase 2b: apply all state mutations.
  for (RobotState& r : w.robots) {
    const std::size_t idx = static_cast<std::size_t>(r.id);
    bt::Blackboard& b = w.boards[idx];

    if (r.dwell != DwellKind::None) {
      r.dwell_remaining -= dt;
      if (r.dwell_remaining <= 1e-12) complete_dwell(w, r, b);
      continue;
    }

    b.held_last_tick = !proposals[idx].stationary && resolved[idx].stationary;
    if (b.held_last_tick) {
      ++b.consecutive_holds;
      record(w, r.id, EventKind::Conflict);
    } else {
      b.consecutive_holds = 0;
    }

    const Vec2 target = resolved[idx].proposed;
    if (distance(target, r.position) > 0.0) {
      r.position = target;
      spend_battery(r, r.per_step_energy);
      record(w, r.id, EventKind::Move);
      check_obstacle_entries(w, r);
      if (r.dwell != DwellKind::None) continue;  // an encounter stopped the robot
    }
    handle_arrivals(w, r, b);
  }

  w.clock += dt;
}

TrialMetrics collect_metrics(const WorldState& w) {
  TrialMetrics m;
  m.rescued_units = w.rescued_total;
  m.rounds_completed = w.rounds_completed;
  for (const RobotState& r : w.robots) {
    m.total_energy_spent += r.energy_spent;
    m.per_robot.push_back({r.id, r.cls, r.rescued, r.energy_spent, r.rounds});
  }
  if (m.rescued_units > 0.0)
    m.energy_per_unit = m.total_energy_spent / m.rescued_units;
  return m;
}

TrialMetrics run_trial(const Scenario& scenario, std::uint64_t seed,
                       bool record_events, std::vector<Event>* events_out) {
  if (!(scenario.duration_s > 0.0))
    throw std::invalid_argument("run_trial: scenario duration must be positive");

  WorldState w = build_world(scenario, seed);
  w.record_events = record_events;

  const long steps = std::lround(scenario.duration_s / scenario.dt_s);
  for (long i = 0; i < steps; ++i) step(w, scenario.dt_s);

  if (events_out != nullptr) *events_out = std::move(w.events);
  return collect_metrics(w);
}

}  // namespace sar::sim
