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

#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <random>

#include "sar/team_optimizer.hpp"

using namespace sar;
using namespace sar::optimizer;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

ProfileSet paper_style_profiles() {
  ProfileSet p;
  p.carrier = {.v = 2.0, .com = 10.0, .sen = 4.0, .eng = 100.0, .res = 8.0, .cap = 40.0};
  p.supplier = {.v = 2.0, .com = 10.0, .sen = 4.0, .eng = 95.0, .res = 100.0, .cap = 8.0};
  p.observer = {.v = 2.5, .com = 100.0, .sen = kInf, .eng = 9.0, .res = 8.0, .cap = 8.0};
  return p;
}

MissionSpec base_mission() {
  MissionSpec m;
  m.t_n = 300.0;
  m.l = 10.0;
  m.n = 12;
  m.c = 1.0;
  m.t_c = 0.5;
  m.e_c = 0.2;
  m.e_t = 5.0;
  return m;
}

/// Independent brute force: recompute each candidate's figures straight
/// from the closed forms and reduce with the same tie-break. Empty when
/// nothing is feasible.
std::optional<TeamComposition> brute_force_best(int budget, const MissionSpec& m,
                                                const ProfileSet& p, bool exact) {
  TeamComposition best;
  double best_u = -1.0;
  double best_e = kInf;
  bool found = false;

  for (int x = 0; x <= budget; ++x)
    for (int y = 0; x + y <= budget; ++y)
      for (int z = 0; x + y + z <= budget; ++z) {
        const int size = x + y + z;
        if (size == 0) continue;
        if (exact && size != budget) continue;

        double cap = 0.0, res = 0.0, sen = 0.0, v = kInf;
        if (x > 0) {
          cap += x * p.carrier.cap;
          res += x * p.carrier.res;
          sen += x * p.carrier.sen;
          v = std::min(v, p.carrier.v);
        }
        if (y > 0) {
          cap += y * p.supplier.cap;
          res += y * p.supplier.res;
          sen += y * p.supplier.sen;
          v = std::min(v, p.supplier.v);
        }
        if (z > 0) {
          cap += z * p.observer.cap;
          res += z * p.observer.res;
          sen += z * p.observer.sen;
          v = std::min(v, p.observer.v);
        }

        const double obstacle = std::isinf(sen) ? 0.0 : m.c * m.n / sen;
        const double lambda = 2.0 * m.l / v + 2.0 * m.t_c * obstacle;
        const double rounds = m.t_n * (lambda > 0 ? (1.0 - std::exp(-lambda)) / lambda : 1.0);
        const double utility = rounds * std::min(cap, res);
        const double energy = m.e_t + 2.0 * obstacle * m.e_c + utility;

        bool feasible = true;
        if (!m.requirement.empty() && rounds * cap < m.requirement[0]) feasible = false;
        if (m.requirement.size() > 1 && rounds * res < m.requirement[1]) feasible = false;
        if (!feasible) continue;

        const bool wins =
            !found || utility > best_u ||
            (utility == best_u &&
             (energy < best_e ||
              (energy == best_e && std::tuple(x, y, z) < std::tuple(best.x, best.y, best.z))));
        if (wins) {
          best = {x, y, z};
          best_u = utility;
          best_e = energy;
          found = true;
        }
      }
  if (!found) return std::nullopt;
  return best;
}

}  // namespace

TEST_CASE("enumerate_compositions in lexicographic order") {
  const auto two = enumerate_compositions(2, true);
  const std::vector<TeamComposition> expected = {
      {0, 0, 2}, {0, 1, 1}, {0, 2, 0}, {1, 0, 1}, {1, 1, 0}, {2, 0, 0}};
  CHECK(two == expected);

  CHECK(enumerate_compositions(1, true).size() == 3);
  CHECK(enumerate_compositions(9, true).size() == 55);
  CHECK_THROWS_AS(enumerate_compositions(0, true), std::invalid_argument);
}

TEST_CASE("enumeration counts follow the stars-and-bars formula") {
  for (int budget = 1; budget <= 12; ++budget) {
    const auto exact = enumerate_compositions(budget, true);
    CHECK(static_cast<int>(exact.size()) == (budget + 1) * (budget + 2) / 2);

    std::size_t expected_inexact = 0;
    for (int s = 1; s <= budget; ++s)
      expected_inexact += static_cast<std::size_t>((s + 1) * (s + 2) / 2);
    CHECK(enumerate_compositions(budget, false).size() == expected_inexact);
  }
}

TEST_CASE("feasibility compares delivered capability against the requirement") {
  ProfileSet p = default_profiles();
  p.carrier = {.v = 2.0, .com = 10.0, .sen = 4.0, .eng = 100.0, .res = 8.0, .cap = 8.0};
  MissionSpec m = base_mission();  // lambda 11, rounds ~27.27, cap 24

  SUBCASE("empty requirement is vacuously feasible") {
    m.requirement = {};
    CHECK(is_feasible({3, 0, 0}, m, p));
  }
  SUBCASE("delivery short of the requirement") {
    m.requirement = {1000.0};
    CHECK_FALSE(is_feasible({3, 0, 0}, m, p));
  }
  SUBCASE("delivery above the requirement") {
    m.requirement = {600.0};
    CHECK(is_feasible({3, 0, 0}, m, p));
  }
  SUBCASE("requirement dimension is capped") {
    m.requirement = {1.0, 1.0, 1.0};
    CHECK_THROWS_AS(is_feasible({3, 0, 0}, m, p), std::invalid_argument);
  }
}

TEST_CASE("paper-style dominance favors a carrier+supplier mix") {
  const auto result = optimize_team(3, base_mission(), paper_style_profiles(), true);
  CHECK(result.best.x > 0);
  CHECK(result.best.y > 0);

  const auto pure = analytics::evaluate_group({3, 0, 0}, base_mission(), paper_style_profiles());
  CHECK(result.report.expected_utility >= pure.expected_utility);
  CHECK(result.evaluated_count == 10);
  CHECK(is_feasible(result.best, base_mission(), paper_style_profiles()));
}

TEST_CASE("impossible requirements surface as no feasible composition") {
  MissionSpec m = base_mission();
  m.requirement = {1e12};
  CHECK_THROWS_AS(optimize_team(3, m, paper_style_profiles(), true), NoFeasibleComposition);
}

TEST_CASE("optimizer matches an independent brute force") {
  const ProfileSet p = paper_style_profiles();
  for (int budget = 1; budget <= 5; ++budget) {
    for (bool exact : {true, false}) {
      for (std::vector<double> requirement :
           {std::vector<double>{}, {300.0, 300.0}, {2000.0}}) {
        MissionSpec m = base_mission();
        m.requirement = requirement;
        const auto oracle = brute_force_best(budget, m, p, exact);
        if (oracle) {
          CHECK(optimize_team(budget, m, p, exact).best == *oracle);
        } else {
          CHECK_THROWS_AS(optimize_team(budget, m, p, exact), NoFeasibleComposition);
        }
      }
    }
  }
}

TEST_CASE("optimizer output does not depend on enumeration order") {
  const ProfileSet p = paper_style_profiles();
  const MissionSpec m = base_mission();
  const auto result = optimize_team(4, m, p, false);

  auto candidates = evaluate_all(4, m, p, false);
  std::mt19937 rng(99);
  for (int round = 0; round < 10; ++round) {
    std::shuffle(candidates.begin(), candidates.end(), rng);
    const RankedComposition* best = nullptr;
    for (const auto& rc : candidates) {
      if (!rc.feasible) continue;
      const bool wins =
          best == nullptr || rc.report.expected_utility > best->report.expected_utility ||
          (rc.report.expected_utility == best->report.expected_utility &&
           (rc.report.expected_energy < best->report.expected_energy ||
            (rc.report.expected_energy == best->report.expected_energy &&
             std::tuple(rc.comp.x, rc.comp.y, rc.comp.z) <
                 std::tuple(best->comp.x, best->comp.y, best->comp.z))));
      if (wins) best = &rc;
    }
    REQUIRE(best != nullptr);
    CHECK(best->comp == result.best);
  }
}

TEST_CASE("a larger inexact budget never lowers the optimum") {
  const ProfileSet p = paper_style_profiles();
  const MissionSpec m = base_mission();
  double prev = 0.0;
  for (int budget = 1; budget <= 6; ++budget) {
    const auto result = optimize_team(budget, m, p, false);
    CHECK(result.report.expected_utility >= prev);
    prev = result.report.expected_utility;
  }
}

TEST_CASE("ties break toward energy and then the smallest composition") {
  // All classes identical: every same-size composition ties on utility and
  // energy, so the lexicographically smallest wins.
  CapabilityProfile same{.v = 1.0, .com = 10.0, .sen = 10.0, .eng = 50.0, .res = 4.0, .cap = 4.0};
  const ProfileSet p{same, same, same};
  MissionSpec m = base_mission();

  const auto exact = optimize_team(2, m, p, true);
  CHECK(exact.best == TeamComposition{0, 0, 2});

  const auto inexact = optimize_team(2, m, p, false);
  CHECK(inexact.best == TeamComposition{0, 0, 2});
}

TEST_CASE("budget guard rejects oversized enumerations") {
  CHECK_THROWS_AS(optimize_team(61, base_mission(), paper_style_profiles(), true),
                  std::invalid_argument);
  CHECK_THROWS_AS(optimize_team(0, base_mission(), paper_style_profiles(), true),
                  std::invalid_argument);
}
