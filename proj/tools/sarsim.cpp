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

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sar/analytics.hpp"
#include "sar/harness/emit.hpp"
#include "sar/harness/experiment.hpp"
#include "sar/harness/scenario_io.hpp"
#include "sar/harness/validation.hpp"
#include "sar/sim/controller.hpp"
#include "sar/sim/world.hpp"
#include "sar/team_optimizer.hpp"
#include "sar/types.hpp"

namespace {

using namespace sar;

TeamComposition parse_composition(const std::string& text) {
  TeamComposition comp;
  char c1 = 0, c2 = 0;
  std::istringstream is(text);
  if (!(is >> comp.x >> c1 >> comp.y >> c2 >> comp.z) || c1 != ',' || c2 != ',')
    throw std::runtime_error("composition '" + text + "' is not of the form x,y,z");
  return comp;
}

std::string join_path(const std::string& dir, const std::string& file) {
  if (dir.empty() || dir == ".") return file;
  return dir.back() == '/' ? dir + file : dir + "/" + file;
}

int cmd_simulate(const std::vector<std::string>& paths, int trials,
                 std::uint64_t seed, int threads, const std::string& out_dir,
                 const std::string& trace_path) {
  std::vector<Scenario> scenarios;
  if (paths.empty()) {
    scenarios = harness::default_scenarios();
  } else {
    for (const std::string& p : paths) scenarios.push_back(harness::load_scenario(p));
  }

  if (!trace_path.empty()) {
    std::string trace;
    for (const Scenario& sc : scenarios) {
      std::vector<sim::Event> events;
      sim::run_trial(sc, seed, true, &events);
      for (const sim::Event& e : events)
        trace += sc.name + " " + sim::to_line(e) + "\n";
    }
    harness::write_file(trace_path, trace);
  }

  const harness::ExperimentResult result =
      harness::run_experiment(scenarios, trials, seed, threads);

  harness::write_file(join_path(out_dir, "trials.csv"), harness::trial_csv(result.trials));
  harness::write_file(join_path(out_dir, "aggregate.csv"),
                      harness::aggregate_csv(result.aggregate));
  harness::write_file(join_path(out_dir, "experiment.json"),
                      harness::experiment_json(result));

  std::cout << harness::aggregate_csv(result.aggregate);
  return 0;
}

int cmd_analytic(const std::string& mission_path,
                 const std::vector<std::string>& comps,
                 const std::vector<std::string>& compare_pair,
                 const std::string& out_dir) {
  const harness::MissionFile mf = harness::load_mission(mission_path);

  std::vector<analytics::GroupEvaluation> evals;
  for (const std::string& text : comps) {
    analytics::GroupEvaluation ge;
    ge.comp = parse_composition(text);
    ge.mission = mf.mission;
    ge.report = analytics::evaluate_group(ge.comp, mf.mission, mf.profiles);
    evals.push_back(ge);
    std::cout << harness::evaluation_json(ge) << "\n";
  }
  if (!evals.empty()) {
    harness::write_file(join_path(out_dir, "analytic.csv"),
                        harness::evaluations_csv(evals));
    std::string all = "[";
    for (std::size_t i = 0; i < evals.size(); ++i)
      all += (i ? ",\n" : "\n") + harness::evaluation_json(evals[i]);
    all += "\n]\n";
    harness::write_file(join_path(out_dir, "analytic.json"), all);
  }
  if (evals.size() > 1) {
    std::ostringstream matrix;
    matrix << "a,b,utility_ratio,energy_difference,energy_per_unit_difference,dominant\n";
    for (const auto& a : evals)
      for (const auto& b : evals) {
        if (a.comp == b.comp) continue;
        const auto cr = analytics::compare(a, b, to_string(a.comp), to_string(b.comp));
        matrix << to_string(a.comp) << ',' << to_string(b.comp) << ','
               << harness::fmt_number(cr.utility_ratio) << ','
               << harness::fmt_number(cr.energy_difference) << ','
               << harness::fmt_number(cr.energy_per_unit_difference) << ','
               << cr.dominant << '\n';
      }
    harness::write_file(join_path(out_dir, "comparisons.csv"), matrix.str());
  }

  if (!compare_pair.empty()) {
    analytics::GroupEvaluation a, b;
    a.comp = parse_composition(compare_pair[0]);
    b.comp = parse_composition(compare_pair[1]);
    a.mission = b.mission = mf.mission;
    a.report = analytics::evaluate_group(a.comp, mf.mission, mf.profiles);
    b.report = analytics::evaluate_group(b.comp, mf.mission, mf.profiles);
    const analytics::ComparisonReport cr =
        analytics::compare(a, b, compare_pair[0], compare_pair[1]);
    const std::string body = harness::comparison_json(cr);
    std::cout << body << "\n";
    harness::write_file(join_path(out_dir, "comparison.json"), body + "\n");
  }
  return 0;
}

int cmd_optimize(int budget, const std::string& mission_path, bool exact,
                 const std::string& out_dir) {
  const harness::MissionFile mf = harness::load_mission(mission_path);
  auto ranked = optimizer::evaluate_all(budget, mf.mission, mf.profiles, exact);
  std::erase_if(ranked, [](const optimizer::RankedComposition& rc) { return !rc.feasible; });
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const optimizer::RankedComposition& a,
                      const optimizer::RankedComposition& b) {
                     return a.report.expected_utility > b.report.expected_utility;
                   });
  harness::write_file(join_path(out_dir, "ranked.csv"), harness::ranked_csv(ranked));

  const optimizer::OptimizationResult result =
      optimizer::optimize_team(budget, mf.mission, mf.profiles, exact);
  const std::string body = harness::optimization_json(result);
  std::cout << body << "\n";
  harness::write_file(join_path(out_dir, "optimization.json"), body + "\n");
  return 0;
}

int cmd_validate(const std::vector<double>& lambdas, long samples,
                 std::uint64_t seed, const std::string& out_path) {
  const harness::ValidationReport report =
      harness::validate_analytic(lambdas, samples, seed);
  const std::string csv = harness::validation_csv(report);
  std::cout << csv;
  if (!out_path.empty()) harness::write_file(out_path, csv);
  return 0;
}

int cmd_dump_defaults(const std::string& out_dir) {
  const ProfileSet profiles = default_profiles();
  std::cout << "built-in capability profiles (v, com, sen, eng, res, cap):\n";
  for (RobotClass cls : kAllClasses) {
    const CapabilityProfile& p = profiles.of(cls);
    std::cout << "  " << to_string(cls) << ": v=" << p.v << " com=" << p.com
              << " sen=" << p.sen << " eng=" << p.eng << " res=" << p.res
              << " cap=" << p.cap << "\n";
  }
  const DominanceOptions opts;
  std::cout << "dominance quantifiers: kappa=" << opts.kappa << " similar=["
            << opts.approx_lo << ", " << opts.approx_hi << "]\n\n";

  for (const harness::ShippedScenario& sc : harness::shipped_scenarios()) {
    if (out_dir.empty()) {
      std::cout << "--- " << sc.stem << ".scn ---\n" << sc.text << "\n";
    } else {
      const std::string path = join_path(out_dir, sc.stem + ".scn");
      harness::write_file(path, sc.text);
      std::cout << "wrote " << path << "\n";
    }
  }
  return 0;
}

int cmd_dump_tree() {
  std::cout << bt::dump_tree(sim::shuttle_needs_tree());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multi-robot search-and-rescue simulation and team analytics"};
  app.require_subcommand(1);

  // simulate
  auto* simulate = app.add_subcommand("simulate", "run seeded trials and emit CSV metrics");
  std::vector<std::string> scenario_paths;
  int trials = 10;
  std::uint64_t seed = 1;
  int threads = 1;
  std::string out_dir = ".";
  std::string trace_path;
  simulate->add_option("scenarios", scenario_paths,
                       "scenario files (default: the four built-in scenarios)");
  simulate->add_option("--trials", trials, "trials per scenario")->default_val(10);
  simulate->add_option("--seed", seed, "base seed; trial i uses seed+i")->default_val(1);
  simulate->add_option("--threads", threads, "trial fan-out")->default_val(1);
  simulate->add_option("--out", out_dir, "output directory")->default_val(".");
  simulate->add_option("--trace", trace_path, "write a per-event trace for seed's trial");

  // analytic
  auto* analytic = app.add_subcommand("analytic", "closed-form expectations for compositions");
  std::string mission_path;
  std::vector<std::string> comps;
  std::vector<std::string> compare_pair;
  analytic->add_option("--mission", mission_path, "mission file")->required();
  analytic->add_option("--composition", comps, "composition x,y,z (repeatable)");
  analytic->add_option("--compare", compare_pair, "two compositions to compare")
      ->expected(2);
  std::string analytic_out = ".";
  analytic->add_option("--out", analytic_out, "output directory")->default_val(".");

  // optimize
  auto* optimize = app.add_subcommand("optimize", "argmax expected utility within a budget");
  int budget = 3;
  bool exact = false;
  std::string optimize_mission;
  std::string optimize_out = ".";
  optimize->add_option("--budget", budget, "robot budget")->required();
  optimize->add_option("--mission", optimize_mission, "mission file")->required();
  optimize->add_flag("--exact", exact, "use exactly budget robots instead of at most");
  optimize->add_option("--out", optimize_out, "output directory")->default_val(".");

  // validate
  auto* validate_cmd = app.add_subcommand("validate", "Monte Carlo check of the closed forms");
  std::vector<double> lambdas = {0.5, 1.0, 2.0, 5.0};
  long samples = 1000000;
  std::uint64_t validate_seed = 1;
  std::string validate_out;
  validate_cmd->add_option("--lambdas", lambdas, "rates to check")
      ->default_val(std::vector<double>{0.5, 1.0, 2.0, 5.0});
  validate_cmd->add_option("--samples", samples, "draws per rate")->default_val(1000000);
  validate_cmd->add_option("--seed", validate_seed, "seed")->default_val(1);
  validate_cmd->add_option("--out", validate_out, "CSV output path");

  // dump-defaults
  auto* dump_defaults = app.add_subcommand(
      "dump-defaults", "print built-in profiles and the shipped scenarios");
  std::string dump_out;
  dump_defaults->add_option("--out", dump_out, "write scenario files to this directory");

  // dump-tree
  app.add_subcommand("dump-tree", "print the needs-hierarchy behavior tree");

  CLI11_PARSE(app, argc, argv);

  try {
    if (simulate->parsed())
      return cmd_simulate(scenario_paths, trials, seed, threads, out_dir, trace_path);
    if (analytic->parsed())
      return cmd_analytic(mission_path, comps, compare_pair, analytic_out);
    if (optimize->parsed())
      return cmd_optimize(budget, optimize_mission, exact, optimize_out);
    if (validate_cmd->parsed())
      return cmd_validate(lambdas, samples, validate_seed, validate_out);
    if (dump_defaults->parsed()) return cmd_dump_defaults(dump_out);
    return cmd_dump_tree();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
