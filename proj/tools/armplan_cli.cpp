/*
 * Copyright 2026 The armplan Authors
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

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "armplan/benchmark.hpp"
#include "armplan/montecarlo.hpp"
#include "armplan/planner.hpp"
#include "armplan/scenario_io.hpp"

namespace {

using namespace armplan;

int run_plan(const std::string& scenario_path, const std::string& out_dir,
             std::optional<std::uint64_t> seed) {
  PlanningProblem problem = load_scenario(scenario_path);
  if (seed) problem.de.seed = *seed;

  const Trajectory traj = plan(problem.scenario, problem.arm, problem.de);
  std::filesystem::create_directories(out_dir);
  const auto dir = std::filesystem::path(out_dir);
  write_trajectory(traj, dir / "trajectory.csv");
  write_trace(traj, dir / "trace.csv");

  std::cout << "outcome: " << (traj.success() ? "SUCCESS" : "FAILURE") << '\n'
            << "steps: " << traj.step_count() << '\n'
            << "initial_distance: " << format_number(traj.initial_distance()) << '\n'
            << "final_distance: " << format_number(traj.final_distance()) << '\n'
            << "accepted_threat: " << (traj.accepted_threat() ? "yes" : "no") << '\n'
            << "wrote: " << (dir / "trajectory.csv").string() << ", "
            << (dir / "trace.csv").string() << '\n';
  return 0;
}

int run_montecarlo(const MonteCarloConfig& config, const std::string& template_path) {
  PlanningProblem base;
  if (!template_path.empty()) {
    base = load_scenario(template_path);
  } else {
    base.arm.link_lengths = {1.0, 1.0, 1.0};
    base.scenario.start = JointConfig(0.0, 30.0 * kDegToRad, 60.0 * kDegToRad);
  }
  const MonteCarloReport r = montecarlo(config, base);
  std::cout << "trials: " << config.trials << '\n'
            << "obstacles_per_trial: " << config.obstacle_count << '\n'
            << "successes: " << r.successes << '\n'
            << "success_rate: " << format_number(r.success_rate)
            << " (reference: 0.9872)\n"
            << "mean_final_distance: " << format_number(r.mean_final_distance) << '\n'
            << "mean_step_energy: " << format_number(r.mean_step_energy) << '\n'
            << "threat_rate: " << format_number(r.threat_rate) << '\n'
            << "errors: " << r.errors << '\n'
            << "runtime_s: " << format_number(r.runtime_seconds) << '\n';
  return 0;
}

int run_bench(const bench::BenchSettings& settings) {
  const de::Result r = bench::run_benchmark(settings);
  std::cout << "function: " << settings.function << '\n'
            << "best_cost: " << format_number(r.best_cost) << '\n'
            << "evaluations: " << r.evaluations << '\n'
            << "best_vector:";
  for (Eigen::Index j = 0; j < r.best_vector.size(); ++j) {
    std::cout << ' ' << format_number(r.best_vector[j]);
  }
  std::cout << "\niteration,best_cost\n";
  for (std::size_t g = 0; g < r.history.size(); ++g) {
    std::cout << g + 1 << ',' << format_number(r.history[g]) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Energy-aware 3-link arm path planning with differential evolution"};
  app.require_subcommand(1);

  auto* plan_cmd = app.add_subcommand("plan", "Plan one scenario and write CSV output");
  std::string scenario_path;
  std::string out_dir = ".";
  std::optional<std::uint64_t> plan_seed;
  plan_cmd->add_option("--scenario", scenario_path, "Scenario JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  plan_cmd->add_option("--out-dir", out_dir, "Directory for trajectory.csv and trace.csv");
  plan_cmd->add_option("--seed", plan_seed, "Override the scenario's DE seed");

  auto* mc_cmd = app.add_subcommand("montecarlo", "Randomized success-rate experiment");
  MonteCarloConfig mc;
  std::string template_path;
  mc_cmd->add_option("--trials", mc.trials, "Number of trials")->capture_default_str();
  mc_cmd->add_option("--seed", mc.seed, "Master seed")->capture_default_str();
  mc_cmd->add_option("--template", template_path,
                     "Scenario JSON supplying arm, start and planner settings")
      ->check(CLI::ExistingFile);
  mc_cmd->add_option("--obstacles", mc.obstacle_count, "Moving obstacles per trial")
      ->capture_default_str();

  auto* bench_cmd = app.add_subcommand("de-bench", "Run DE on a standard test function");
  bench::BenchSettings bs;
  bench_cmd->add_option("--function", bs.function, "sphere | rosenbrock | rastrigin")
      ->capture_default_str();
  bench_cmd->add_option("--dim", bs.dimension, "Dimension")->capture_default_str();
  bench_cmd->add_option("--np", bs.population_size, "Population size")->capture_default_str();
  bench_cmd->add_option("--iters", bs.max_iterations, "Generations")->capture_default_str();
  bench_cmd->add_option("--seed", bs.seed, "Seed")->capture_default_str();
  bench_cmd->add_option("--F", bs.scale_factor, "Scale factor")->capture_default_str();
  bench_cmd->add_option("--cr", bs.crossover_prob, "Crossover probability")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*plan_cmd) return run_plan(scenario_path, out_dir, plan_seed);
    if (*mc_cmd) return run_montecarlo(mc, template_path);
    if (*bench_cmd) return run_bench(bs);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
