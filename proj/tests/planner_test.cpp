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

#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

namespace armplan {
namespace {

class PlannerTest : public ::testing::Test {
 protected:
  void SetUp() override {
    arm_.link_lengths = {1, 1, 1};
    scenario_.start = JointConfig(0, 30 * kDegToRad, 60 * kDegToRad);
    scenario_.goal = Point3(0.8, 0.9, 1.5);
    de_.seed = 11;
  }

  de::Params fast_de(int iterations = 40) const {
    de::Params p = de_;
    p.population_size = 40;
    p.max_iterations = iterations;
    return p;
  }

  ArmModel arm_;
  Scenario scenario_;
  de::Params de_;
};

TEST_F(PlannerTest, DistanceToGoal) {
  ArmModel arm = arm_;
  arm.link_lengths = {0, 1, 1};
  EXPECT_NEAR(distance_to_goal(arm, {0, 0, 0}, Point3::Zero()), 2.0, 1e-15);
  const JointConfig q(0.2, 0.4, 0.6);
  EXPECT_EQ(distance_to_goal(arm, q, end_effector(arm, q)), 0.0);

  std::mt19937_64 gen(1);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int n = 0; n < 100; ++n) {
    const JointConfig c(u(gen), u(gen), u(gen));
    const Point3 g(u(gen), u(gen), u(gen));
    const Point3 e = end_effector(arm, c);
    const double dx = e.x() - g.x(), dy = e.y() - g.y(), dz = e.z() - g.z();
    EXPECT_NEAR(distance_to_goal(arm, c, g), std::sqrt(dx * dx + dy * dy + dz * dz),
                1e-12);
  }
}

TEST_F(PlannerTest, StepCostVanishesAtRestOnGoal) {
  const JointConfig q(0.3, 0.5, 0.2);
  scenario_.goal = end_effector(arm_, q);
  const CostBreakdown c = step_cost(q, q, scenario_, arm_, 1);
  EXPECT_EQ(c.total, 0.0);
  EXPECT_FALSE(c.threat);
}

TEST_F(PlannerTest, StepCostSumsTermsAndThreatDominates) {
  const JointConfig prev = scenario_.start;
  const JointConfig cand(0.2, 0.7, 1.0);
  const JointPoints p = joint_points(arm_, cand);
  const Point3 mid = 0.5 * (p[2] + p[3]);
  scenario_.obstacles.push_back({mid + Point3(0, 0, 0.01), 0.05, Eigen::Vector3d::Zero()});
  const CostBreakdown c = step_cost(cand, prev, scenario_, arm_, 0);
  EXPECT_TRUE(c.threat);
  EXPECT_GE(c.total, 10000.0);
  EXPECT_EQ(c.total, c.delta_potential + c.kinetic + c.distance + c.avoidance);
  EXPECT_EQ(c.delta_potential + c.kinetic, energy_cost(arm_, prev, cand));
}

TEST_F(PlannerTest, StepCostWeights) {
  scenario_.weights = {0.0, 2.0, 0.0};
  const JointConfig cand(0.2, 0.7, 1.0);
  const CostBreakdown c = step_cost(cand, scenario_.start, scenario_, arm_, 0);
  EXPECT_EQ(c.total, 2.0 * c.distance);
}

TEST_F(PlannerTest, StepBoundsIntersectLimitsAndWindow) {
  Eigen::VectorXd lo, hi;
  JointConfig q(155 * kDegToRad, 0, -130 * kDegToRad);
  step_bounds(arm_, q, lo, hi);
  EXPECT_NEAR(hi[0], 160 * kDegToRad, 1e-15);
  EXPECT_NEAR(lo[0], 135 * kDegToRad, 1e-12);
  EXPECT_NEAR(lo[2], -135 * kDegToRad, 1e-15);

  JointConfig outside(170 * kDegToRad, 0, 0);
  arm_.max_step = 5 * kDegToRad;
  EXPECT_THROW(step_bounds(arm_, outside, lo, hi), std::invalid_argument);
}

TEST_F(PlannerTest, ZeroStepWindowKeepsConfiguration) {
  arm_.max_step = 0.0;
  const StepResult r = plan_step(scenario_.start, scenario_, arm_, fast_de(5), 1);
  EXPECT_EQ(r.q_next, scenario_.start);
}

TEST_F(PlannerTest, StepImprovesDistanceWithWideWindow) {
  arm_.max_step = std::numbers::pi;
  int improved = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    de::Params p = de_;
    p.seed = seed;
    const StepResult r = plan_step(scenario_.start, scenario_, arm_, p, 1);
    if (distance_to_goal(arm_, r.q_next, scenario_.goal) <
        distance_to_goal(arm_, scenario_.start, scenario_.goal)) {
      ++improved;
    }
  }
  EXPECT_GE(improved, 99);
}

TEST_F(PlannerTest, StepRespectsVelocityBound) {
  std::mt19937_64 gen(4);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  for (int n = 0; n < 30; ++n) {
    const JointConfig q(u(gen), u(gen), u(gen));
    scenario_.goal = Point3(u(gen), u(gen), 1.0 + u(gen));
    de::Params p = fast_de(10);
    p.seed = static_cast<std::uint64_t>(n);
    const StepResult r = plan_step(q, scenario_, arm_, p, 1);
    const JointSpeeds w = angular_velocity(q, r.q_next);
    EXPECT_LE(w.maxCoeff(), arm_.max_step);
    EXPECT_TRUE(arm_.within_limits(r.q_next));
  }
}

TEST_F(PlannerTest, StartAtGoalNeedsNoSteps) {
  scenario_.goal = end_effector(arm_, scenario_.start) + Point3(0.05, 0, 0);
  const Trajectory t = plan(scenario_, arm_, de_);
  EXPECT_EQ(t.step_count(), 0);
  EXPECT_TRUE(t.success());
  EXPECT_EQ(t.steps.size(), 1u);
}

TEST_F(PlannerTest, ReachesGoalWithFeasibleWaypoints) {
  const Trajectory t = plan(scenario_, arm_, de_);
  EXPECT_TRUE(t.success());
  EXPECT_LE(t.final_distance(), scenario_.goal_tolerance);
  EXPECT_LT(t.final_distance(), t.initial_distance());
  ASSERT_EQ(t.waypoints.size(), t.steps.size());
  for (std::size_t k = 1; k < t.waypoints.size(); ++k) {
    EXPECT_LE(angular_velocity(t.waypoints[k - 1], t.waypoints[k]).maxCoeff(),
              arm_.max_step);
    EXPECT_TRUE(arm_.within_limits(t.waypoints[k]));
    const auto& h = t.steps[k].de_history;
    ASSERT_EQ(h.size(), 100u);
    for (std::size_t g = 1; g < h.size(); ++g) EXPECT_LE(h[g], h[g - 1]);
    EXPECT_EQ(h.back(), t.steps[k].cost.total);
  }
}

TEST_F(PlannerTest, AvoidsObstacleOnTheDirectRoute) {
  // Parked between the start pose and the goal, drifting slowly.
  scenario_.obstacles.push_back(
      {Point3(0.45, 1.3, 1.75), 0.2, Eigen::Vector3d(0.0, 0.0, -0.02)});
  const Trajectory t = plan(scenario_, arm_, de_);
  EXPECT_FALSE(t.accepted_threat());
  EXPECT_TRUE(t.success());
  for (std::size_t k = 1; k < t.steps.size(); ++k) {
    // Recomputing the step cost at the step's own time reproduces the record.
    const CostBreakdown c = step_cost(t.waypoints[k], t.waypoints[k - 1], scenario_,
                                      arm_, static_cast<int>(k));
    EXPECT_EQ(c.total, t.steps[k].cost.total);
  }
}

TEST_F(PlannerTest, HorizonExhaustionIsAFailureNotAnError) {
  scenario_.horizon = 1;
  scenario_.goal = Point3(-1.0, -1.0, 0.5);
  const Trajectory t = plan(scenario_, arm_, de_);
  EXPECT_FALSE(t.success());
  EXPECT_EQ(t.step_count(), 1);
}

TEST_F(PlannerTest, DeterministicForSeed) {
  const Trajectory a = plan(scenario_, arm_, de_);
  const Trajectory b = plan(scenario_, arm_, de_);
  EXPECT_EQ(a.waypoints, b.waypoints);
}

TEST_F(PlannerTest, RejectsInvalidScenario) {
  Scenario bad = scenario_;
  bad.horizon = 0;
  EXPECT_THROW(plan(bad, arm_, de_), std::invalid_argument);
  bad = scenario_;
  bad.start = JointConfig(3.0, 0, 0);
  EXPECT_THROW(plan(bad, arm_, de_), std::invalid_argument);
  bad = scenario_;
  bad.goal_tolerance = 0.0;
  EXPECT_THROW(plan(bad, arm_, de_), std::invalid_argument);
  bad = scenario_;
  bad.weights.energy = -1.0;
  EXPECT_THROW(plan(bad, arm_, de_), std::invalid_argument);
}

}  // namespace
}  // namespace armplan
