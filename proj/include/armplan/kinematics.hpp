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

#include <array>
#include <numbers>
#include <optional>

#include <Eigen/Core>

namespace armplan {

using Point3 = Eigen::Vector3d;

/// Per-joint speeds in radians per unit time.
using JointSpeeds = Eigen::Vector3d;

constexpr double kDegToRad = std::numbers::pi / 180.0;
constexpr double kRadToDeg = 180.0 / std::numbers::pi;

/// One joint-angle vector (t1, t2, t3) in radians.
///
/// t1 rotates the arm about +z, t2 is the shoulder angle measured from +z and
/// t3 is the elbow angle relative to the upper link.
struct JointConfig {
  Eigen::Vector3d angles = Eigen::Vector3d::Zero();

  JointConfig() = default;
  explicit JointConfig(const Eigen::Vector3d& a) : angles(a) {}
  JointConfig(double t1, double t2, double t3) : angles(t1, t2, t3) {}

  double operator[](int k) const { return angles[k]; }
  double& operator[](int k) { return angles[k]; }

  bool operator==(const JointConfig& other) const {
    return angles == other.angles;
  }
};

struct JointLimit {
  double min = 0.0;
  double max = 0.0;

  bool contains(double angle) const { return angle >= min && angle <= max; }
  bool operator==(const JointLimit&) const = default;
};

/// Kinematic and energetic constants of the 3-link arm.
///
/// Masses are lumped at the distal end of each link. When `inertias` is unset
/// each link uses I_k = m_k * L_k^2.
struct ArmModel {
  std::array<double, 3> link_lengths{1.0, 1.0, 1.0};
  std::array<double, 3> masses{0.1, 0.1, 0.1};
  std::optional<std::array<double, 3>> inertias;
  double gravity = 1.0;
  std::array<JointLimit, 3> joint_limits{
      JointLimit{-160.0 * kDegToRad, 160.0 * kDegToRad},
      JointLimit{-110.0 * kDegToRad, 110.0 * kDegToRad},
      JointLimit{-135.0 * kDegToRad, 135.0 * kDegToRad}};
  /// Largest per-joint change between consecutive waypoints.
  double max_step = 20.0 * kDegToRad;

  double inertia(int k) const;

  bool within_limits(const JointConfig& q) const;

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;

  bool operator==(const ArmModel&) const = default;
};

/// Joint positions in the world frame: base, shoulder, elbow, end effector.
using JointPoints = std::array<Point3, 4>;

/// End-effector position. The base sits at the origin and the shoulder at
/// (0, 0, L1); with L1 = 0 this is the textbook 3-DOF formula.
Point3 end_effector(const ArmModel& arm, const JointConfig& q);

/// Consecutive pairs form the three collidable segments.
JointPoints joint_points(const ArmModel& arm, const JointConfig& q);

/// Unit-time finite difference |q_next - q_prev|, componentwise.
JointSpeeds angular_velocity(const JointConfig& q_prev,
                             const JointConfig& q_next);

}  // namespace armplan
