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

#include "armplan/planner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace armplan {

void Scenario::validate(const ArmModel& arm) const {
  if (!start.angles.allFinite()) {
    throw std::invalid_argument("start_deg must be finite");
  }
  if (!arm.within_limits(start)) {
    throw std::invalid_argument("start_deg lies outside the joint limits");
  }
  if (!goal.allFinite()) throw std::invalid_argument("goal must be finite");
  for (std::size_t j = 0; j < obstacles.size(); ++j) {
    try {
      obstacles[j].validate();
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("obstacles[" + std::to_string(j) +
                                  "]: " + e.what());
    }
  }
  if (horizon < 1) throw std::invalid_argument("horizon must be >= 1");
  avoidance.validate();
  if (!(goal_tolerance > 0.0) || !std::isfinite(goal_tolerance)) {
    throw std::invalid_argument("goal_tolerance must be finite and > 0");
  }
  for (double w : {weights.energy, weights.distance, weights.avoidance}) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw std::invalid_argument("cost_weights must be finite and >= 0");
    }
  }
}

double distance_to_goal(const ArmModel& arm, const JointConfig& q,
                        const Point3& goal) {
  return (end_effector(arm, q) - goal).norm();
}

StepCostModel::StepCostModel(const Scenario& scenario, const ArmModel& arm,
                             const JointConfig& q_prev, int t)
    : scenario_(scenario),
      arm_(arm),
      q_prev_(q_prev),
      prev_potential_(potential_energy(arm, q_prev)),
      t_(t) {}

CostBreakdown StepCostModel::evaluate(const JointConfig& candidate) const {
  CostBreakdown c;
  c.delta_potential =
      std::abs(potential_energy(arm_, candidate) - prev_potential_);
  c.kinetic = kinetic_energy(arm_, angular_velocity(q_prev_, candidate));
  c.distance = distance_to_goal(arm_, candidate, scenario_.goal);
  const AvoidanceValue av = avoidance_value(
      arm_, candidate, scenario_.obstacles, t_, scenario_.avoidance);
  c.avoidance = av.penalty;
  c.threat = av.threat_flag;
  const CostWeights& w = scenario_.weights;
  c.total = w.energy * (c.delta_potential + c.kinetic) + w.distance * c.distance +
            w.avoidance * c.avoidance;
  return c;
}

CostBreakdown step_cost(const JointConfig& candidate,
                        const JointConfig& q_prev, const Scenario& scenario,
                        const ArmModel& arm, int t) {
  return StepCostModel(scenario, arm, q_prev, t).evaluate(candidate);
}

void step_bounds(const ArmModel& arm, const JointConfig& q_current,
                 Eigen::VectorXd& lower, Eigen::VectorXd& upper) {
  if (!(arm.max_step >= 0.0)) {
    throw std::invalid_argument("arm.max_step must be >= 0");
  }
  lower.resize(3);
  upper.resize(3);
  for (int k = 0; k < 3; ++k) {
    // q +/- max_step can round outward; pull each end in until the
    // computed difference is within max_step.
    double lo = q_current[k] - arm.max_step;
    double hi = q_current[k] + arm.max_step;
    while (q_current[k] - lo > arm.max_step) lo = std::nextafter(lo, q_current[k]);
    while (hi - q_current[k] > arm.max_step) hi = std::nextafter(hi, q_current[k]);
    lower[k] = std::max(arm.joint_limits[k].min, lo);
    upper[k] = std::min(arm.joint_limits[k].max, hi);
    if (!(lower[k] <= upper[k])) {
      throw std::invalid_argument("infeasible joint state: joint " +
                                  std::to_string(k + 1) +
                                  " has an empty step window");
    }
  }
}

StepResult plan_step(const JointConfig& q_current, const Scenario& scenario,
                     const ArmModel& arm, const de::Params& de_params, int t) {
  if (t < 0 || t > scenario.horizon) {
    throw std::invalid_argument("plan_step time outside [0, horizon]");
  }
  de::Params params = de_params;
  step_bounds(arm, q_current, params.lower, params.upper);

  const StepCostModel model(scenario, arm, q_current, t);
  StepResult out;
  out.optimizer = de::run(
      [&model](const Eigen::VectorXd& x) {
        return model.evaluate(JointConfig(Eigen::Vector3d(x))).total;
      },
      params);
  out.q_next = JointConfig(Eigen::Vector3d(out.optimizer.best_vector));
  return out;
}

bool Trajectory::accepted_threat() const {
  return std::any_of(steps.begin() + std::min<std::size_t>(1, steps.size()),
                     steps.end(),
                     [](const StepRecord& s) { return s.cost.threat; });
}

namespace {

StepRecord make_record(int t, const JointConfig& q, const JointConfig& q_prev,
                       const Scenario& scenario, const ArmModel& arm) {
  StepRecord r;
  r.step = t;
  r.q = q;
  r.end_effector = end_effector(arm, q);
  r.cost = step_cost(q, q_prev, scenario, arm, t);
  const ClearanceReport report =
      avoidance_penalty(arm, q, scenario.obstacles, t, scenario.avoidance);
  r.obstacle_clearance.resize(scenario.obstacles.size());
  for (std::size_t j = 0; j < scenario.obstacles.size(); ++j) {
    r.obstacle_clearance[j] = report.min_clearance(static_cast<int>(j));
  }
  r.min_clearance = report.min_clearance();
  return r;
}

}  // namespace

Trajectory plan(const Scenario& scenario, const ArmModel& arm,
                const de::Params& de_params) {
  arm.validate();
  scenario.validate(arm);

  Trajectory traj;
  JointConfig q = scenario.start;
  traj.waypoints.push_back(q);
  traj.steps.push_back(make_record(0, q, q, scenario, arm));

  for (int t = 1; t <= scenario.horizon &&
                  traj.steps.back().cost.distance > scenario.goal_tolerance;
       ++t) {
    de::Params params = de_params;
    params.seed = de::derive_seed(de_params.seed, static_cast<std::uint64_t>(t));
    StepResult step = plan_step(q, scenario, arm, params, t);

    StepRecord record = make_record(t, step.q_next, q, scenario, arm);
    record.de_history = std::move(step.optimizer.history);
    record.evaluations = step.optimizer.evaluations;
    q = step.q_next;
    traj.waypoints.push_back(q);
    traj.steps.push_back(std::move(record));
  }

  const bool arrived = traj.final_distance() <= scenario.goal_tolerance;
  traj.outcome = arrived && !traj.accepted_threat() ? PlanOutcome::kSuccess
                                                    : PlanOutcome::kFailure;
  return traj;
}

}  // namespace armplan
