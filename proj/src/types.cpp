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

#include "sar/types.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace sar {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

std::string to_string(RobotClass cls) {
  switch (cls) {
    case RobotClass::Carrier: return "carrier";
    case RobotClass::Supplier: return "supplier";
    case RobotClass::Observer: return "observer";
  }
  return "unknown";
}

std::string to_string(const TeamComposition& comp) {
  std::ostringstream os;
  os << "(" << comp.x << "," << comp.y << "," << comp.z << ")";
  return os.str();
}

const CapabilityProfile& ProfileSet::of(RobotClass cls) const {
  switch (cls) {
    case RobotClass::Carrier: return carrier;
    case RobotClass::Supplier: return supplier;
    case RobotClass::Observer: return observer;
  }
  return carrier;
}

void validate(const MissionSpec& mission) {
  require(mission.t_n > 0 && std::isfinite(mission.t_n), "mission t_n must be positive");
  require(mission.l > 0 && std::isfinite(mission.l), "mission l must be positive");
  require(mission.n >= 0, "mission n must be non-negative");
  require(mission.c > 0 && std::isfinite(mission.c), "mission c must be positive");
  require(mission.t_c >= 0 && std::isfinite(mission.t_c), "mission t_c must be non-negative");
  require(mission.e_c >= 0 && std::isfinite(mission.e_c), "mission e_c must be non-negative");
  require(mission.e_t >= 0 && std::isfinite(mission.e_t), "mission e_t must be non-negative");
  for (double r : mission.requirement)
    require(r >= 0 && std::isfinite(r), "mission requirement entries must be non-negative");
}

CapabilityProfile default_profile(RobotClass cls) {
  // Values chosen once so that the set passes check_dominance under the
  // default options while keeping capacity 8 (carrier), 1 (observer) and a
  // resource-rich supplier.
  switch (cls) {
    case RobotClass::Carrier:
      return {.v = 1.0, .com = 30.0, .sen = 30.0, .eng = 100.0, .res = 8.0, .cap = 8.0};
    case RobotClass::Supplier:
      return {.v = 0.8, .com = 40.0, .sen = 25.0, .eng = 95.0, .res = 100.0, .cap = 0.8};
    case RobotClass::Observer:
      return {.v = 10.0, .com = 400.0, .sen = kInf, .eng = 9.0, .res = 0.5, .cap = 1.0};
  }
  return {};
}

ProfileSet default_profiles() {
  return {default_profile(RobotClass::Carrier),
          default_profile(RobotClass::Supplier),
          default_profile(RobotClass::Observer)};
}

namespace {

bool much_greater(double a, double b, double kappa) {
  if (std::isinf(a) && !std::isinf(b)) return true;
  return a >= kappa * b;
}

bool similar(double a, double b, const DominanceOptions& o) {
  if (a == b) return true;  // covers +inf vs +inf
  if (b == 0.0) return a == 0.0;
  const double ratio = a / b;
  return ratio >= o.approx_lo && ratio <= o.approx_hi;
}

std::string fmt(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

std::vector<DominanceViolation> check_dominance(const ProfileSet& p,
                                                const DominanceOptions& o) {
  std::vector<DominanceViolation> out;
  auto flag = [&out](const char* relation, const std::string& detail) {
    out.push_back({relation, detail});
  };

  const auto& c = p.carrier;
  const auto& s = p.supplier;
  const auto& ob = p.observer;

  // communication: com_o >> com_s ~ com_c
  if (!much_greater(ob.com, s.com, o.kappa) || !much_greater(ob.com, c.com, o.kappa) ||
      !similar(s.com, c.com, o))
    flag("communication", "expected com_o >> com_s ~ com_c, got o=" + fmt(ob.com) +
                              " s=" + fmt(s.com) + " c=" + fmt(c.com));

  // sensing: sen_o >> sen_s ~ sen_c
  if (!much_greater(ob.sen, s.sen, o.kappa) || !much_greater(ob.sen, c.sen, o.kappa) ||
      !similar(s.sen, c.sen, o))
    flag("sensing", "expected sen_o >> sen_s ~ sen_c, got o=" + fmt(ob.sen) +
                        " s=" + fmt(s.sen) + " c=" + fmt(c.sen));

  // velocity: v_o > v_s ~ v_c
  if (!(ob.v > s.v) || !(ob.v > c.v) || !similar(s.v, c.v, o))
    flag("velocity", "expected v_o > v_s ~ v_c, got o=" + fmt(ob.v) + " s=" + fmt(s.v) +
                         " c=" + fmt(c.v));

  // energy: eng_c > eng_s >= kappa * eng_o
  if (!(c.eng > s.eng) || !(s.eng >= o.kappa * ob.eng))
    flag("energy", "expected eng_c > eng_s >= kappa*eng_o, got c=" + fmt(c.eng) +
                       " s=" + fmt(s.eng) + " o=" + fmt(ob.eng));

  // resources: res_s >= kappa * res_c > res_o (chained on the scaled term)
  if (!much_greater(s.res, c.res, o.kappa) || !(o.kappa * c.res > ob.res))
    flag("resources", "expected res_s >= kappa*res_c > res_o, got s=" + fmt(s.res) +
                          " c=" + fmt(c.res) + " o=" + fmt(ob.res));

  // capacity: cap_c >= kappa * cap_s > cap_o (chained on the scaled term)
  if (!much_greater(c.cap, s.cap, o.kappa) || !(o.kappa * s.cap > ob.cap))
    flag("capacity", "expected cap_c >= kappa*cap_s > cap_o, got c=" + fmt(c.cap) +
                         " s=" + fmt(s.cap) + " o=" + fmt(ob.cap));

  return out;
}

AggregateCapability aggregate_capability(const TeamComposition& comp,
                                         const ProfileSet& profiles) {
  require(comp.x >= 0 && comp.y >= 0 && comp.z >= 0,
          "composition counts must be non-negative");
  require(comp.size() >= 1, "composition must contain at least one robot");

  AggregateCapability agg;
  agg.min_v = kInf;
  const std::array<std::pair<int, const CapabilityProfile*>, 3> members = {
      {{comp.x, &profiles.carrier},
       {comp.y, &profiles.supplier},
       {comp.z, &profiles.observer}}};
  for (const auto& [count, prof] : members) {
    if (count == 0) continue;
    agg.total_cap += count * prof->cap;
    agg.total_res += count * prof->res;
    agg.total_sen += count * prof->sen;  // +inf absorbs
    agg.min_v = std::min(agg.min_v, prof->v);
  }
  return agg;
}

}  // namespace sar
