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
#include <stdexcept>
#include <vector>

#include "armplan/kinematics.hpp"

namespace armplan {

/// Sphere moving with constant velocity from its initial center.
struct Obstacle {
  Point3 initial_center = Point3::Zero();
  double radius = 1.0;
  Eigen::Vector3d velocity = Eigen::Vector3d::Zero();

  void validate() const;
  bool operator==(const Obstacle& other) const {
    return initial_center == other.initial_center && radius == other.radius &&
           velocity == other.velocity;
  }
};

/// Raised for segments shorter than kMinSegmentLength.
class DegenerateSegmentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

constexpr double kMinSegmentLength = 1e-12;
constexpr double kWithinSegmentTolerance = 1e-9;

/// C(t) = C0 + t * V.
Point3 obstacle_center_at(const Obstacle& obs, int t);

/// Radius of the sphere through the corners of a cube of edge `edge`.
double circumsphere_radius_of_cube(double edge);

struct SegmentClearance {
  double distance = 0.0;  // to the infinite line AB
  double l1 = 0.0;        // |AD|, D the foot of the perpendicular
  double l2 = 0.0;        // |BD|
  bool within = false;    // l1 + l2 == |AB| up to relative tolerance
  double length = 0.0;    // |AB|
  double endpoint_distance = 0.0;  // min(|AC|, |BC|)

  /// Distance from C to the closed segment.
  double segment_distance() const {
    return within ? distance : endpoint_distance;
  }
};

/// Perpendicular clearance of point C from segment AB, with the foot-on-segment
/// test. Throws DegenerateSegmentError when |AB| <= kMinSegmentLength.
SegmentClearance segment_clearance(const Point3& a, const Point3& b,
                                   const Point3& c);

enum class AvoidanceMode {
  kZeroWhenSafe,  // safe pairs contribute nothing
  kPaperLiteral,  // safe pairs contribute their perpendicular distance
};

struct AvoidanceParams {
  /// Clearance margin per arm segment (base, upper arm, forearm), added to
  /// each obstacle radius.
  std::array<double, 3> thresholds{0.1, 0.1, 0.1};
  double n_f = 10000.0;
  AvoidanceMode mode = AvoidanceMode::kZeroWhenSafe;

  void validate() const;
  bool operator==(const AvoidanceParams&) const = default;
};

struct PairClearance {
  int segment = 0;
  int obstacle = 0;
  SegmentClearance geometry;
  double radius = 0.0;
  bool threat = false;

  /// Surface clearance: closed-segment distance minus the obstacle radius.
  double surface_clearance() const {
    return geometry.segment_distance() - radius;
  }
};

struct ClearanceReport {
  std::vector<PairClearance> pairs;  // segment-major
  double penalty = 0.0;
  bool threat_flag = false;

  /// Smallest surface clearance to obstacle `j` over all segments;
  /// +inf when there are no pairs for it.
  double min_clearance(int j) const;
  /// Smallest surface clearance over all pairs; +inf without obstacles.
  double min_clearance() const;
};

/// Avoidance penalty of configuration q against obstacles advanced to time t.
///
/// A (segment, obstacle) pair is a threat when the perpendicular distance is
/// below threshold + radius and the perpendicular foot lies on the segment.
/// Every threat adds n_f + d to the penalty.
ClearanceReport avoidance_penalty(const ArmModel& arm, const JointConfig& q,
                                  const std::vector<Obstacle>& obstacles,
                                  int t, const AvoidanceParams& params);

/// Same penalty and threat flag as avoidance_penalty, without the report.
struct AvoidanceValue {
  double penalty = 0.0;
  bool threat_flag = false;
};
AvoidanceValue avoidance_value(const ArmModel& arm, const JointConfig& q,
                               const std::vector<Obstacle>& obstacles, int t,
                               const AvoidanceParams& params);

}  // namespace armplan
