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

#include <vector>

#include "armplan/collision.hpp"
#include "armplan/differential_evolution.hpp"
#include "armplan/energy.hpp"
#include "armplan/kinematics.hpp"

namespace armplan {

struct CostWeights {
  double energy = 1.0;
  double distance = 1.0;
  double avoidance = 1.0;

  bool operator==(const CostWeights&) const = default;
};

struct Scenario {
  JointConfig start;
  Point3 goal = Point3::Zero();
  std::vector<Obstacle> obstacles;
  /// Maximum number of unit-time steps.
  int horizon = 20;
  AvoidanceParams avoidance;
  double goal_tolerance = 0.1;
  CostWeights weights;

  /// Throws std::invalid_argument naming the offending field.
  void validate(const ArmModel& arm) const;

  bool operator==(const Scenario& other) const {
    return start == other.start && goal == other.goal &&
           obstacles == other.obstacles && horizon == other.horizon &&
           avoidance == other.avoidance &&
           goal_tolerance == other.goal_tolerance && weights == other.weights;
  }
};

struct CostBreakdown {
  double delta_potential = 0.0;
  double kinetic = 0.0;
  double distance = 0.0;
  double avoidance = 0.0;
  double total = 0.0;
  bool threat = false;
};

double distance_to_goal(const ArmModel& arm, const JointConfig& q,
                        const Point3& goal);

/// Cost of moving from a fixed previous waypoint to candidate waypoints at
/// time t. Caches the previous potential energy; evaluate() is const and
/// thread-safe.
class StepCostModel {
 public:
  StepCostModel(const Scenario& scenario, const ArmModel& arm,
                const JointConfig& q_prev, int t);

  CostBreakdown evaluate(const JointConfig& candidate) const;

 private:
  const Scenario& scenario_;
  const ArmModel& arm_;
  JointConfig q_prev_;
  double prev_potential_;
  int t_;
};

/// F = w_e * (|dP| + K) + w_d * D + w_a * A_vd for one candidate.
CostBreakdown step_cost(const JointConfig& candidate,
                        const JointConfig& q_prev, const Scenario& scenario,
                        const ArmModel& arm, int t);

/// Diagnostics for one waypoint. Step 0 describes the start configuration.
struct StepRecord {
  int step = 0;
  JointConfig q;
  Point3 end_effector = Point3::Zero();
  CostBreakdown cost;
  /// Surface clearance per obstacle (+inf when there are none).
  std::vector<double> obstacle_clearance;
  double min_clearance = 0.0;
  std::vector<double> de_history;
  long evaluations = 0;
};

struct StepResult {
  JointConfig q_next;
  de::Result optimizer;
};

/// Per-step search box: joint limits intersected with the ω_max window
/// around q_current. Throws std::invalid_argument when a box is empty.
void step_bounds(const ArmModel& arm, const JointConfig& q_current,
                 Eigen::VectorXd& lower, Eigen::VectorXd& upper);

/// One DE optimization of the next waypoint at time t. The bounds of
/// `de_params` are replaced by step_bounds().
StepResult plan_step(const JointConfig& q_current, const Scenario& scenario,
                     const ArmModel& arm, const de::Params& de_params, int t);

enum class PlanOutcome { kSuccess, kFailure };

struct Trajectory {
  /// waypoints[0] is the start; waypoints[t] is the configuration at time t.
  std::vector<JointConfig> waypoints;
  std::vector<StepRecord> steps;
  PlanOutcome outcome = PlanOutcome::kFailure;

  int step_count() const { return static_cast<int>(waypoints.size()) - 1; }
  double final_distance() const { return steps.back().cost.distance; }
  double initial_distance() const { return steps.front().cost.distance; }
  bool success() const { return outcome == PlanOutcome::kSuccess; }
  /// True when any waypoint after the start was accepted under a threat.
  bool accepted_threat() const;
};

/// Runs plan_step for t = 1..horizon, stopping once the end effector is
/// within goal_tolerance. Step t uses DE seed derive_seed(seed, t).
Trajectory plan(const Scenario& scenario, const ArmModel& arm,
                const de::Params& de_params);

}  // namespace armplan
