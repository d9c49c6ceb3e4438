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

#include "sar/harness/scenario_io.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace sar::harness {

namespace {

struct Directive {
  int line = 0;
  std::string key;
  std::vector<std::string> values;
};

std::vector<Directive> tokenize(const std::string& text, const std::string& origin) {
  std::vector<Directive> out;
  std::istringstream stream(text);
  std::string line;
  int line_no = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream ls(line);
    Directive d;
    d.line = line_no;
    if (!(ls >> d.key)) continue;  // blank or comment-only line
    std::string token;
    while (ls >> token) d.values.push_back(token);
    if (d.values.empty())
      throw std::runtime_error(origin + ":" + std::to_string(line_no) +
                               ": directive '" + d.key + "' has no value");
    out.push_back(std::move(d));
  }
  return out;
}

[[noreturn]] void fail(const std::string& origin, const Directive& d,
                       const std::string& what) {
  throw std::runtime_error(origin + ":" + std::to_string(d.line) + ": " + what);
}

double parse_number(const std::string& origin, const Directive& d,
                    const std::string& token) {
  if (token == "inf") return std::numeric_limits<double>::infinity();
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    fail(origin, d, "'" + token + "' is not a number for key '" + d.key + "'");
  return value;
}

double single_number(const std::string& origin, const Directive& d) {
  if (d.values.size() != 1)
    fail(origin, d, "key '" + d.key + "' expects exactly one value");
  return parse_number(origin, d, d.values[0]);
}

bool single_bool(const std::string& origin, const Directive& d) {
  if (d.values.size() != 1 || (d.values[0] != "true" && d.values[0] != "false"))
    fail(origin, d, "key '" + d.key + "' expects true or false");
  return d.values[0] == "true";
}

Vec2 point(const std::string& origin, const Directive& d) {
  if (d.values.size() != 2)
    fail(origin, d, "key '" + d.key + "' expects two coordinates");
  return {parse_number(origin, d, d.values[0]), parse_number(origin, d, d.values[1])};
}

ClassSetup default_setup(RobotClass cls) {
  switch (cls) {
    case RobotClass::Carrier:
      return {.count = 0, .velocity = 1.0, .sense_range = 6.0, .step_energy = 0.045,
              .capacity = 8.0, .charge_threshold = 30.0, .charge_duration_s = 10.0};
    case RobotClass::Supplier:
      return {.count = 0, .velocity = 0.8, .sense_range = 5.0, .step_energy = 0.03,
              .capacity = 4.0, .charge_threshold = 30.0, .charge_duration_s = 10.0};
    case RobotClass::Observer:
      return {.count = 0, .velocity = 10.0,
              .sense_range = std::numeric_limits<double>::infinity(),
              .step_energy = 0.015, .capacity = 1.0, .charge_threshold = 30.0,
              .charge_duration_s = 10.0};
  }
  return {};
}

bool apply_class_key(const std::string& origin, const Directive& d,
                     const std::string& field, ClassSetup& setup) {
  const double v = single_number(origin, d);
  if (field == "count") {
    setup.count = static_cast<int>(v);
    if (setup.count != v) fail(origin, d, "count must be an integer");
  } else if (field == "velocity") {
    setup.velocity = v;
  } else if (field == "sense_range") {
    setup.sense_range = v;
  } else if (field == "step_energy") {
    setup.step_energy = v;
  } else if (field == "capacity") {
    setup.capacity = v;
  } else if (field == "charge_threshold") {
    setup.charge_threshold = v;
  } else if (field == "charge_duration_s") {
    setup.charge_duration_s = v;
  } else {
    return false;
  }
  return true;
}

}  // namespace

Scenario parse_scenario(const std::string& text, const std::string& origin) {
  Scenario s;
  s.carrier = default_setup(RobotClass::Carrier);
  s.supplier = default_setup(RobotClass::Supplier);
  s.observer = default_setup(RobotClass::Observer);

  for (const Directive& d : tokenize(text, origin)) {
    const std::string& key = d.key;
    if (key == "name") {
      if (d.values.size() != 1) fail(origin, d, "name expects one token");
      s.name = d.values[0];
    } else if (key == "duration_s") {
      s.duration_s = single_number(origin, d);
    } else if (key == "dt_s") {
      s.dt_s = single_number(origin, d);
    } else if (key == "cooperation") {
      s.cooperation = single_bool(origin, d);
    } else if (key == "victims") {
      if (d.values.size() == 1 && d.values[0] == "ample") {
        s.victims.reset();
      } else {
        const double v = single_number(origin, d);
        s.victims = static_cast<long>(v);
        if (static_cast<double>(*s.victims) != v)
          fail(origin, d, "victims must be an integer or 'ample'");
      }
    } else if (key == "shelter") {
      s.shelter = point(origin, d);
    } else if (key == "rescue_site") {
      s.rescue_site = point(origin, d);
    } else if (key == "charge_station") {
      s.charge_station = point(origin, d);
    } else if (key == "safety_radius") {
      s.safety_radius = single_number(origin, d);
    } else if (key == "arrive_radius") {
      s.arrive_radius = single_number(origin, d);
    } else if (key == "lane_offset") {
      s.lane_offset = single_number(origin, d);
    } else if (key == "spawn_radius") {
      s.spawn_radius = single_number(origin, d);
    } else if (key == "handling_s") {
      s.handling_s = single_number(origin, d);
    } else if (key == "load_energy") {
      s.load_energy = single_number(origin, d);
    } else if (key == "obstacle.count") {
      s.obstacle_count = static_cast<int>(single_number(origin, d));
    } else if (key == "obstacle.rate_coeff") {
      s.obstacle_rate_coeff = single_number(origin, d);
    } else if (key == "obstacle.tackle_s") {
      s.obstacle_tackle_s = single_number(origin, d);
    } else if (key == "obstacle.tackle_energy") {
      s.obstacle_tackle_energy = single_number(origin, d);
    } else if (key == "obstacle.radius") {
      s.obstacle_radius = single_number(origin, d);
    } else if (const auto dot = key.find('.'); dot != std::string::npos) {
      const std::string cls = key.substr(0, dot);
      const std::string field = key.substr(dot + 1);
      ClassSetup* setup = cls == "carrier"    ? &s.carrier
                          : cls == "supplier" ? &s.supplier
                          : cls == "observer" ? &s.observer
                                              : nullptr;
      if (setup == nullptr || !apply_class_key(origin, d, field, *setup))
        fail(origin, d, "unknown key '" + key + "'");
    } else {
      fail(origin, d, "unknown key '" + key + "'");
    }
  }

  validate(s);
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open scenario file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str(), path);
}

MissionFile parse_mission(const std::string& text, const std::string& origin) {
  MissionFile mf;
  mf.profiles = default_profiles();

  for (const Directive& d : tokenize(text, origin)) {
    const std::string& key = d.key;
    if (key == "t_n") {
      mf.mission.t_n = single_number(origin, d);
    } else if (key == "l") {
      mf.mission.l = single_number(origin, d);
    } else if (key == "n") {
      mf.mission.n = static_cast<int>(single_number(origin, d));
    } else if (key == "c") {
      mf.mission.c = single_number(origin, d);
    } else if (key == "t_c") {
      mf.mission.t_c = single_number(origin, d);
    } else if (key == "e_c") {
      mf.mission.e_c = single_number(origin, d);
    } else if (key == "e_t") {
      mf.mission.e_t = single_number(origin, d);
    } else if (key == "requirement") {
      if (d.values.size() > 2)
        fail(origin, d, "requirement supports at most (capacity, resources)");
      mf.mission.requirement.clear();
      for (const std::string& v : d.values)
        mf.mission.requirement.push_back(parse_number(origin, d, v));
    } else if (key.rfind("profile.", 0) == 0) {
      const std::string rest = key.substr(8);
      const auto dot = rest.find('.');
      if (dot == std::string::npos) fail(origin, d, "unknown key '" + key + "'");
      const std::string cls = rest.substr(0, dot);
      const std::string field = rest.substr(dot + 1);
      CapabilityProfile* prof = cls == "carrier"    ? &mf.profiles.carrier
                                : cls == "supplier" ? &mf.profiles.supplier
                                : cls == "observer" ? &mf.profiles.observer
                                                    : nullptr;
      if (prof == nullptr) fail(origin, d, "unknown key '" + key + "'");
      const double v = single_number(origin, d);
      if (field == "v") prof->v = v;
      else if (field == "com") prof->com = v;
      else if (field == "sen") prof->sen = v;
      else if (field == "eng") prof->eng = v;
      else if (field == "res") prof->res = v;
      else if (field == "cap") prof->cap = v;
      else fail(origin, d, "unknown key '" + key + "'");
    } else {
      fail(origin, d, "unknown key '" + key + "'");
    }
  }

  validate(mf.mission);
  return mf;
}

MissionFile load_mission(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open mission file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_mission(buf.str(), path);
}

namespace {

std::string scenario_text(const std::string& name, const std::string& composition,
                          const std::string& cooperation) {
  std::string text;
  text += "# " + name + "\n";
  text += "name " + name + "\n";
  text +=
      "duration_s 300\n"
      "dt_s 0.1\n"
      "victims ample\n"
      "handling_s 1\n"
      "safety_radius 0.6\n"
      "arrive_radius 2.5\n"
      "lane_offset 0.75\n"
      "spawn_radius 4\n"
      "load_energy 9\n"
      "shelter 0 0\n"
      "rescue_site 38 0\n"
      "charge_station 0 -12\n"
      "obstacle.count 0\n";
  text += composition;
  text += "cooperation " + cooperation + "\n";
  return text;
}

constexpr const char* kCarrierSix =
    "carrier.count 6\n"
    "carrier.velocity 1.0\n"
    "carrier.step_energy 0.045\n"
    "carrier.capacity 8\n";
constexpr const char* kObserverSix =
    "observer.count 6\n"
    "observer.velocity 10.0\n"
    "observer.step_energy 0.015\n"
    "observer.capacity 1\n";
constexpr const char* kMixedThreeThree =
    "carrier.count 3\n"
    "carrier.velocity 1.0\n"
    "carrier.step_energy 0.045\n"
    "carrier.capacity 8\n"
    "observer.count 3\n"
    "observer.velocity 10.0\n"
    "observer.step_energy 0.015\n"
    "observer.capacity 1\n";

}  // namespace

const std::vector<ShippedScenario>& shipped_scenarios() {
  static const std::vector<ShippedScenario> shipped = {
      {"sc1_homogeneous_carriers",
       scenario_text("sc1_homogeneous_carriers", kCarrierSix, "false")},
      {"sc2_homogeneous_observers",
       scenario_text("sc2_homogeneous_observers", kObserverSix, "false")},
      {"sc3_heterogeneous_noncoop",
       scenario_text("sc3_heterogeneous_noncoop", kMixedThreeThree, "false")},
      {"sc4_heterogeneous_coop",
       scenario_text("sc4_heterogeneous_coop", kMixedThreeThree, "true")},
  };
  return shipped;
}

std::vector<Scenario> default_scenarios() {
  std::vector<Scenario> out;
  for (const ShippedScenario& s : shipped_scenarios())
    out.push_back(parse_scenario(s.text, s.stem));
  return out;
}

}  // namespace sar::harness
