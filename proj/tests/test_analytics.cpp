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

#include <cmath>
#include <limits>

#include "sar/analytics.hpp"

using namespace sar;
using namespace sar::analytics;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// Independent oracle for E[1/(T+1)], T ~ Poisson(lambda): the truncated
/// series sum_k 1/(k+1) * lambda^k e^-lambda / k!.
double series_reciprocal(double lambda, int terms = 80) {
  double term = std::exp(-lambda);  // k = 0
  double sum = 0.0;
  for (int k = 0; k < terms; ++k) {
    sum += term / (k + 1);
    term *= lambda / (k + 1);
  }
  return sum;
}

/// Profiles for the worked three-carrier setup: lambda 11 at mission
/// l=10, v=2, n=12, c=1, t_c=0.5 with summed sensing 12.
ProfileSet worked_profiles() {
  ProfileSet p = default_profiles();
  p.carrier = {.v = 2.0, .com = 10.0, .sen = 4.0, .eng = 100.0, .res = 8.0, .cap = 40.0};
  p.supplier = {.v = 2.0, .com = 10.0, .sen = 4.0, .eng = 95.0, .res = 100.0, .cap = 8.0};
  p.observer = {.v = 2.5, .com = 100.0, .sen = kInf, .eng = 9.0, .res = 8.0, .cap = 8.0};
  return p;
}

MissionSpec worked_mission() {
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

}  // namespace

TEST_CASE("encounter_rate follows c*n over summed sensing") {
  CHECK(encounter_rate(1.0, 12, 4.0) == doctest::Approx(3.0));
  CHECK(encounter_rate(1.0, 0, 4.0) == 0.0);
  CHECK(encounter_rate(1.0, 12, kInf) == 0.0);
  CHECK_THROWS_AS(encounter_rate(1.0, 12, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(encounter_rate(1.0, 12, -1.0), std::invalid_argument);
}

TEST_CASE("round_trip_lambda combines travel and obstacle terms") {
  MissionSpec m;
  m.l = 10.0;
  m.t_c = 0.5;
  m.c = 1.0;

  m.n = 0;
  CHECK(round_trip_lambda(m, 2.0, 12.0) == doctest::Approx(10.0));

  m.n = 12;
  CHECK(round_trip_lambda(m, 2.0, 12.0) == doctest::Approx(11.0));
  CHECK(round_trip_lambda(m, 2.0, kInf) == doctest::Approx(10.0));

  CHECK_THROWS_AS(round_trip_lambda(m, 0.0, 12.0), std::invalid_argument);
  CHECK_THROWS_AS(round_trip_lambda(m, -1.0, 12.0), std::invalid_argument);
}

TEST_CASE("poisson reciprocal expectation matches the series oracle") {
  CHECK(poisson_reciprocal_expectation(0.0) == 1.0);
  CHECK(poisson_reciprocal_expectation(1.0) == doctest::Approx(0.632121).epsilon(1e-6));
  CHECK(poisson_reciprocal_expectation(2.0) == doctest::Approx(0.432332).epsilon(1e-6));
  for (double lambda : {0.1, 0.5, 1.0, 2.0, 5.0, 11.0, 20.0}) {
    CHECK(poisson_reciprocal_expectation(lambda) ==
          doctest::Approx(series_reciprocal(lambda)).epsilon(1e-12));
  }
  CHECK_THROWS_AS(poisson_reciprocal_expectation(-0.1), std::invalid_argument);
}

TEST_CASE("poisson reciprocal expectation properties") {
  double prev = poisson_reciprocal_expectation(0.0);
  CHECK(prev == 1.0);
  for (double lambda = 0.25; lambda <= 40.0; lambda += 0.25) {
    const double f = poisson_reciprocal_expectation(lambda);
    CHECK(f < prev);  // strictly decreasing
    CHECK(f > 0.0);
    CHECK(f <= 1.0);
    CHECK(std::abs(lambda * f - (1.0 - std::exp(-lambda))) <= 1e-12);
    prev = f;
  }
}

TEST_CASE("expected_rounds scales the reciprocal expectation by the budget") {
  CHECK(expected_rounds(300.0, 11.0) == doctest::Approx(27.2725).epsilon(1e-3));
  CHECK(expected_rounds(300.0, 0.0) == 300.0);
  CHECK(expected_rounds(1.0, 1.0) == doctest::Approx(0.632121).epsilon(1e-6));
  CHECK_THROWS_AS(expected_rounds(0.0, 1.0), std::invalid_argument);
}

TEST_CASE("effective_throughput is the min of capacity and resources") {
  CHECK(effective_throughput(24.0, 30.0) == 24.0);
  CHECK(effective_throughput(88.0, 116.0) == 88.0);
  for (double k : {0.0, 1.0, 17.5}) CHECK(effective_throughput(k, k) == k);
}

TEST_CASE("expected utility reproduces the worked three-carrier figure") {
  const auto report = expected_utility({3, 0, 0}, worked_mission(), worked_profiles());
  CHECK(report.lambda_round == doctest::Approx(11.0));
  CHECK(report.throughput_per_round == doctest::Approx(24.0));
  CHECK(report.expected_utility == doctest::Approx(654.54).epsilon(1e-4));

  // Structural identity, exact.
  CHECK(report.expected_utility == report.expected_rounds * report.throughput_per_round);
  CHECK(report.expected_rounds <= worked_mission().t_n);
}

TEST_CASE("an obstacle-free mission reduces to pure travel time") {
  const ProfileSet p = worked_profiles();
  MissionSpec m = worked_mission();
  m.n = 0;
  m.t_c = 0.0;
  const auto report = evaluate_group({3, 0, 0}, m, p);
  CHECK(report.lambda_round == 2.0 * m.l / p.carrier.v);
  CHECK(report.expected_utility ==
        doctest::Approx(expected_rounds(m.t_n, report.lambda_round) *
                        report.throughput_per_round));
}

TEST_CASE("a group with an observer ignores the obstacle count") {
  const ProfileSet p = worked_profiles();
  MissionSpec m = worked_mission();
  const auto with_obstacles = expected_utility({1, 0, 1}, m, p);
  m.n = 0;
  const auto without = expected_utility({1, 0, 1}, m, p);
  CHECK(with_obstacles.lambda_round == doctest::Approx(2.0 * m.l / p.carrier.v));
  CHECK(with_obstacles.expected_utility == doctest::Approx(without.expected_utility));
}

TEST_CASE("expected energy adds travel, obstacle and rescue terms") {
  const auto report = expected_energy({3, 0, 0}, worked_mission(), worked_profiles());
  // e_t + (2*c*n/sen)*e_c + E(U) = 5 + 0.4 + 654.53
  CHECK(report.expected_energy == doctest::Approx(659.93).epsilon(1e-4));

  MissionSpec no_obstacles = worked_mission();
  no_obstacles.n = 0;
  const auto clean = expected_energy({3, 0, 0}, no_obstacles, worked_profiles());
  CHECK(clean.expected_energy == clean.expected_utility + no_obstacles.e_t);
}

TEST_CASE("same-size pure groups with equal sensing, speed and throughput cost the same") {
  ProfileSet p = worked_profiles();
  // carrier: min(3*40, 3*8) = 24; supplier: min(3*8, 3*100) = 24
  const MissionSpec m = worked_mission();
  const auto carrier = evaluate_group({3, 0, 0}, m, p);
  const auto supplier = evaluate_group({0, 3, 0}, m, p);
  CHECK(carrier.throughput_per_round == supplier.throughput_per_round);
  CHECK(carrier.expected_energy - supplier.expected_energy == 0.0);
}

TEST_CASE("pure groups differing only in sensing and speed follow the rate ratio") {
  ProfileSet p = worked_profiles();
  p.observer = {.v = 4.0, .com = 10.0, .sen = 12.0, .eng = 9.0, .res = 8.0, .cap = 40.0};
  p.observer.res = p.carrier.res;
  p.observer.cap = p.carrier.cap;  // equal throughput, different sen and v
  const MissionSpec m = worked_mission();

  const auto a = evaluate_group({3, 0, 0}, m, p);
  const auto b = evaluate_group({0, 0, 3}, m, p);
  REQUIRE(a.throughput_per_round == b.throughput_per_round);

  const double la = a.lambda_round;
  const double lb = b.lambda_round;
  const double expected_ratio =
      (lb * (1.0 - std::exp(-la))) / (la * (1.0 - std::exp(-lb)));
  CHECK(a.expected_utility / b.expected_utility ==
        doctest::Approx(expected_ratio).epsilon(1e-12));
}

TEST_CASE("symmetric carrier+observer and supplier+observer groups cost the same") {
  // Symmetric setup: res_c = cap_s = cap_o = res_o = k, equal carrier and
  // supplier speed and sensing, observers sense everything.
  const double k = 8.0;
  ProfileSet p;
  p.carrier = {.v = 2.0, .com = 10.0, .sen = 4.0, .eng = 100.0, .res = k, .cap = 40.0};
  p.supplier = {.v = 2.0, .com = 10.0, .sen = 4.0, .eng = 95.0, .res = 100.0, .cap = k};
  p.observer = {.v = 6.0, .com = 100.0, .sen = kInf, .eng = 9.0, .res = k, .cap = k};
  const MissionSpec m = worked_mission();

  const auto carriers_observers = evaluate_group({2, 0, 1}, m, p);
  const auto suppliers_observers = evaluate_group({0, 2, 1}, m, p);
  CHECK(carriers_observers.expected_energy - suppliers_observers.expected_energy == 0.0);
  CHECK(carriers_observers.expected_utility == suppliers_observers.expected_utility);
}

TEST_CASE("monotonicity in sensing and obstacle count") {
  ProfileSet p = worked_profiles();
  MissionSpec m = worked_mission();

  double prev_utility = 0.0;
  for (double sen = 1.0; sen <= 64.0; sen *= 2.0) {
    p.carrier.sen = sen;
    const double u = evaluate_group({3, 0, 0}, m, p).expected_utility;
    CHECK(u >= prev_utility);
    prev_utility = u;
  }

  p = worked_profiles();
  double prev = kInf;
  for (int n = 0; n <= 64; n += 8) {
    m.n = n;
    const double u = evaluate_group({3, 0, 0}, m, p).expected_utility;
    CHECK(u <= prev);
    prev = u;
  }
}

TEST_CASE("comparing a carrier+supplier mix against pure carriers") {
  const ProfileSet p = worked_profiles();
  const MissionSpec m = worked_mission();

  GroupEvaluation mix{{2, 1, 0}, m, evaluate_group({2, 1, 0}, m, p)};
  GroupEvaluation pure{{3, 0, 0}, m, evaluate_group({3, 0, 0}, m, p)};

  const ComparisonReport r = compare(mix, pure, "mix", "pure");
  CHECK(r.utility_ratio > 1.0);
  CHECK(r.energy_per_unit_difference < 0.0);  // cheaper per rescued unit
  CHECK(r.dominant == "mix");

  bool tagged = false;
  for (const auto& note : r.notes)
    if (note == "carrier-supplier-mix-vs-pure-carriers") tagged = true;
  CHECK(tagged);
}

TEST_CASE("self-comparison is a tie") {
  const ProfileSet p = worked_profiles();
  const MissionSpec m = worked_mission();
  GroupEvaluation g{{3, 0, 0}, m, evaluate_group({3, 0, 0}, m, p)};
  const ComparisonReport r = compare(g, g);
  CHECK(r.utility_ratio == 1.0);
  CHECK(r.energy_difference == 0.0);
  CHECK(r.dominant == "tie");
}

TEST_CASE("compare rejects mismatched missions") {
  const ProfileSet p = worked_profiles();
  MissionSpec m1 = worked_mission();
  MissionSpec m2 = worked_mission();
  m2.l = 11.0;
  GroupEvaluation a{{3, 0, 0}, m1, evaluate_group({3, 0, 0}, m1, p)};
  GroupEvaluation b{{3, 0, 0}, m2, evaluate_group({3, 0, 0}, m2, p)};
  CHECK_THROWS_AS(compare(a, b), std::invalid_argument);
}

TEST_CASE("evaluate_group rejects an empty composition") {
  CHECK_THROWS_AS(evaluate_group({0, 0, 0}, worked_mission(), worked_profiles()),
                  std::invalid_argument);
}
