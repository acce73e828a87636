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

#include "armplan/montecarlo.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace armplan {

void MonteCarloConfig::validate(const ArmModel& arm) const {
  if (trials < 1) throw std::invalid_argument("montecarlo.trials must be >= 1");
  if (!(goal_radius_min > 0.0 && goal_radius_min < goal_radius_max &&
        goal_radius_max <= 1.0)) {
    throw std::invalid_argument(
        "montecarlo goal radii must satisfy 0 < min < max <= 1");
  }
  // Sufficient conditions for every shell point to have a solution inside
  // the joint limits with t1 equal to the goal azimuth: the elbow can fold to
  // the inner radius and the shoulder can tilt to the cap edge.
  const double l2 = arm.link_lengths[1];
  const double l3 = arm.link_lengths[2];
  const auto& elbow = arm.joint_limits[2];
  const double fold = std::min(elbow.max, -elbow.min);
  const double fold_radius =
      std::sqrt(std::max(0.0, l2 * l2 + l3 * l3 + 2.0 * l2 * l3 * std::cos(fold)));
  if (goal_radius_min * (l2 + l3) < fold_radius) {
    throw std::invalid_argument(
        "montecarlo.goal_radius_min is inside the elbow folding limit");
  }
  const auto& shoulder = arm.joint_limits[1];
  if (!(goal_max_polar_deg > 0.0) ||
      goal_max_polar_deg * kDegToRad > std::min(shoulder.max, -shoulder.min)) {
    throw std::invalid_argument(
        "montecarlo.goal_max_polar_deg exceeds the shoulder limits");
  }
  if (obstacle_count < 0) {
    throw std::invalid_argument("montecarlo.obstacle_count must be >= 0");
  }
  if (!(radius_min > 0.0 && radius_min <= radius_max)) {
    throw std::invalid_argument("montecarlo radii must satisfy 0 < min <= max");
  }
  if (!(speed_max >= 0.0)) {
    throw std::invalid_argument("montecarlo.speed_max must be >= 0");
  }
  if (max_draws < 1) throw std::invalid_argument("montecarlo.max_draws must be >= 1");
}

bool MonteCarloReport::same_statistics(const MonteCarloReport& other) const {
  return trials == other.trials && successes == other.successes &&
         success_rate == other.success_rate &&
         mean_final_distance == other.mean_final_distance &&
         mean_step_energy == other.mean_step_energy &&
         threat_rate == other.threat_rate && errors == other.errors;
}

bool trial_admissible(const PlanningProblem& problem) {
  const ArmModel& arm = problem.arm;
  const Scenario& s = problem.scenario;
  const auto& th = s.avoidance.thresholds;
  const double max_th = *std::max_element(th.begin(), th.end());

  if (distance_to_goal(arm, s.start, s.goal) <= s.goal_tolerance) return false;

  const JointPoints start = joint_points(arm, s.start);
  for (const Obstacle& obs : s.obstacles) {
    for (int i = 0; i < 3; ++i) {
      const double d =
          segment_clearance(start[i], start[i + 1], obs.initial_center)
              .segment_distance();
      if (d < obs.radius + th[i]) return false;
    }
    for (int t = 0; t <= s.horizon; ++t) {
      const Point3 c = obstacle_center_at(obs, t);
      if (segment_clearance(start[0], start[1], c).segment_distance() <
          obs.radius + th[0]) {
        return false;
      }
      if ((s.goal - c).norm() < obs.radius + max_th) return false;
    }
  }
  return true;
}

namespace {

Eigen::Vector3d unit_vector(double cos_polar, double azimuth) {
  const double sin_polar = std::sqrt(std::max(0.0, 1.0 - cos_polar * cos_polar));
  return {sin_polar * std::cos(azimuth), sin_polar * std::sin(azimuth), cos_polar};
}

// Direction whose base angle t1 = atan2(x, y) equals `base_angle`.
Eigen::Vector3d arm_direction(double cos_polar, double base_angle) {
  const double sin_polar = std::sqrt(std::max(0.0, 1.0 - cos_polar * cos_polar));
  return {sin_polar * std::sin(base_angle), sin_polar * std::cos(base_angle),
          cos_polar};
}

}  // namespace

PlanningProblem sample_trial(const MonteCarloConfig& config,
                             const PlanningProblem& base, int index) {
  const std::uint64_t seed =
      de::derive_seed(config.seed, static_cast<std::uint64_t>(index));
  de::Rng rng(seed);

  const auto& L = base.arm.link_lengths;
  const double reach = L[1] + L[2];
  const Point3 shoulder(0.0, 0.0, L[0]);
  const double r_lo = std::pow(config.goal_radius_min * reach, 3);
  const double r_hi = std::pow(config.goal_radius_max * reach, 3);
  const double cos_cap = std::cos(config.goal_max_polar_deg * kDegToRad);
  constexpr double kTwoPi = 2.0 * std::numbers::pi;

  PlanningProblem p = base;
  p.de.seed = de::derive_seed(seed, 1);
  for (int draw = 0; draw < config.max_draws; ++draw) {
    const double r = std::cbrt(rng.uniform(r_lo, r_hi));
    const double cos_polar = rng.uniform(cos_cap, 1.0);
    const double base_angle = rng.uniform(base.arm.joint_limits[0].min,
                                          base.arm.joint_limits[0].max);
    p.scenario.goal = shoulder + r * arm_direction(cos_polar, base_angle);

    p.scenario.obstacles.clear();
    for (int j = 0; j < config.obstacle_count; ++j) {
      Obstacle obs;
      const double x = rng.uniform(-reach, reach);
      const double y = rng.uniform(-reach, reach);
      const double z = rng.uniform(L[0] - 0.5 * reach, L[0] + reach);
      obs.initial_center = Point3(x, y, z);
      obs.radius = rng.uniform(config.radius_min, config.radius_max);
      const double vc = rng.uniform(-1.0, 1.0);
      const double va = rng.uniform(0.0, kTwoPi);
      obs.velocity = rng.uniform(0.0, config.speed_max) * unit_vector(vc, va);
      p.scenario.obstacles.push_back(obs);
    }
    if (trial_admissible(p)) return p;
  }
  throw std::runtime_error("no admissible trial within montecarlo.max_draws");
}

MonteCarloReport montecarlo(const MonteCarloConfig& config,
                            const PlanningProblem& base,
                            const TrialObserver& observer) {
  config.validate(base.arm);
  const auto started = std::chrono::steady_clock::now();

  MonteCarloReport report;
  double distance_sum = 0.0;
  double energy_sum = 0.0;
  long step_sum = 0;
  int threats = 0;
  int planned = 0;
  for (int i = 0; i < config.trials; ++i) {
    TrialResult tr;
    tr.index = i;
    tr.seed = de::derive_seed(config.seed, static_cast<std::uint64_t>(i));
    try {
      const PlanningProblem problem = sample_trial(config, base, i);
      const Trajectory traj = plan(problem.scenario, problem.arm, problem.de);
      tr.success = traj.success();
      tr.threat = traj.accepted_threat();
      tr.steps = traj.step_count();
      tr.initial_distance = traj.initial_distance();
      tr.final_distance = traj.final_distance();
      for (std::size_t k = 1; k < traj.steps.size(); ++k) {
        tr.energy += traj.steps[k].cost.delta_potential + traj.steps[k].cost.kinetic;
      }
      ++planned;
      distance_sum += tr.final_distance;
      energy_sum += tr.energy;
      step_sum += tr.steps;
      if (tr.threat) ++threats;
      if (tr.success) ++report.successes;
      if (observer) observer(tr, problem, traj);
    } catch (const std::exception& e) {
      tr.error = true;
      tr.error_message = e.what();
      ++report.errors;
    }
    report.trials.push_back(std::move(tr));
  }

  const double n = static_cast<double>(config.trials);
  report.success_rate = report.successes / n;
  report.threat_rate = threats / n;
  report.mean_final_distance = planned > 0 ? distance_sum / planned : 0.0;
  report.mean_step_energy = step_sum > 0 ? energy_sum / step_sum : 0.0;
  report.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
          .count();
  return report;
}

}  // namespace armplan
