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

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "armplan/scenario_io.hpp"

namespace armplan {

/// Sampling rules for randomized planning trials.
///
/// Goals are uniform by volume in a spherical shell around the shoulder,
/// restricted to directions within `goal_max_polar_deg` of +z and to base
/// angles atan2(x, y) inside the base joint limits, i.e. the part of the
/// workspace reachable without the mirrored (t1 + 180 deg) pose. Radii are
/// fractions of the reach L2 + L3. Obstacle centers are uniform in the box
/// [-reach, reach]^2 x [L1 - reach/2, L1 + reach], radii uniform in
/// [radius_min, radius_max], velocities uniform in direction with speed
/// uniform in [0, speed_max] per unit time.
///
/// A trial is redrawn when:
///   - the goal lies within goal_tolerance of the start end effector;
///   - an obstacle is within radius + threshold of a start-pose segment;
///   - an obstacle comes within radius + threshold of the fixed base segment
///     at any time 0..horizon;
///   - the goal lies within radius + max(threshold) of an obstacle at any time
///     0..horizon.
struct MonteCarloConfig {
  int trials = 100;
  std::uint64_t seed = 1;
  double goal_radius_min = 0.45;
  double goal_radius_max = 0.95;
  double goal_max_polar_deg = 100.0;
  int obstacle_count = 3;
  double radius_min = 0.15;
  double radius_max = 0.35;
  double speed_max = 0.1;
  int max_draws = 10000;

  /// Throws std::invalid_argument; needs the arm to check the goal shell.
  void validate(const ArmModel& arm) const;
};

struct TrialResult {
  int index = 0;
  std::uint64_t seed = 0;
  bool success = false;
  bool threat = false;
  bool error = false;
  std::string error_message;
  int steps = 0;
  double initial_distance = 0.0;
  double final_distance = 0.0;
  double energy = 0.0;  // sum of |dP| + K over accepted steps

  bool operator==(const TrialResult&) const = default;
};

struct MonteCarloReport {
  std::vector<TrialResult> trials;
  int successes = 0;
  double success_rate = 0.0;
  double mean_final_distance = 0.0;
  double mean_step_energy = 0.0;
  double threat_rate = 0.0;
  int errors = 0;
  double runtime_seconds = 0.0;

  /// Equality of everything but the wall-clock runtime.
  bool same_statistics(const MonteCarloReport& other) const;
};

/// Draws trial `index` from the template. Start, arm, DE settings and
/// scenario constants come from the template; goal, obstacles and DE seed
/// are sampled.
PlanningProblem sample_trial(const MonteCarloConfig& config,
                             const PlanningProblem& base, int index);

/// Checks the rejection rules above; true when the trial is admissible.
bool trial_admissible(const PlanningProblem& problem);

using TrialObserver = std::function<void(const TrialResult&,
                                         const PlanningProblem&,
                                         const Trajectory&)>;

/// Plans every trial and aggregates. Per-trial seeds derive from the master
/// seed and the trial index.
MonteCarloReport montecarlo(const MonteCarloConfig& config,
                            const PlanningProblem& base,
                            const TrialObserver& observer = {});

}  // namespace armplan
