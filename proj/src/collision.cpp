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

#include "armplan/collision.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Geometry>

namespace armplan {

void Obstacle::validate() const {
  if (!initial_center.allFinite() || !velocity.allFinite()) {
    throw std::invalid_argument("obstacle center and velocity must be finite");
  }
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw std::invalid_argument("obstacle radius must be finite and > 0");
  }
}

Point3 obstacle_center_at(const Obstacle& obs, int t) {
  if (t < 0) throw std::invalid_argument("obstacle time must be >= 0");
  return obs.initial_center + static_cast<double>(t) * obs.velocity;
}

double circumsphere_radius_of_cube(double edge) {
  if (!(edge > 0.0) || !std::isfinite(edge)) {
    throw std::invalid_argument("cube edge must be finite and > 0");
  }
  return std::sqrt(3.0) / 2.0 * edge;
}

SegmentClearance segment_clearance(const Point3& a, const Point3& b,
                                   const Point3& c) {
  const Eigen::Vector3d ab = b - a;
  const Eigen::Vector3d ac = c - a;
  const Eigen::Vector3d bc = c - b;

  SegmentClearance out;
  out.length = ab.norm();
  if (!(out.length > kMinSegmentLength)) {
    throw DegenerateSegmentError(
        "degenerate arm segment: zero link length or invalid configuration");
  }
  out.distance = ab.cross(ac).norm() / out.length;
  const double d2 = out.distance * out.distance;
  // Pythagoras on both endpoints; rounding can push the radicand below 0.
  out.l1 = std::sqrt(std::max(0.0, ac.squaredNorm() - d2));
  out.l2 = std::sqrt(std::max(0.0, bc.squaredNorm() - d2));
  out.within = std::abs(out.l1 + out.l2 - out.length) <=
               kWithinSegmentTolerance * out.length;
  out.endpoint_distance = std::min(ac.norm(), bc.norm());
  return out;
}

void AvoidanceParams::validate() const {
  for (int i = 0; i < 3; ++i) {
    if (!(thresholds[i] > 0.0) || !std::isfinite(thresholds[i])) {
      throw std::invalid_argument("thresholds[" + std::to_string(i) +
                                  "] must be finite and > 0");
    }
  }
  if (!(n_f > 0.0) || !std::isfinite(n_f)) {
    throw std::invalid_argument("n_f must be finite and > 0");
  }
}

double ClearanceReport::min_clearance(int j) const {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& p : pairs) {
    if (p.obstacle == j) best = std::min(best, p.surface_clearance());
  }
  return best;
}

double ClearanceReport::min_clearance() const {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& p : pairs) best = std::min(best, p.surface_clearance());
  return best;
}

namespace {

template <typename PairSink>
AvoidanceValue accumulate_penalty(const ArmModel& arm, const JointConfig& q,
                                  const std::vector<Obstacle>& obstacles,
                                  int t, const AvoidanceParams& params,
                                  PairSink&& sink) {
  AvoidanceValue value;
  if (obstacles.empty()) return value;

  const JointPoints joints = joint_points(arm, q);

  for (int i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < obstacles.size(); ++j) {
      const SegmentClearance g =
          segment_clearance(joints[i], joints[i + 1],
                            obstacle_center_at(obstacles[j], t));
      const bool threat =
          g.within && g.distance < params.thresholds[i] + obstacles[j].radius;
      if (threat) {
        value.penalty += params.n_f + g.distance;
        value.threat_flag = true;
      } else if (params.mode == AvoidanceMode::kPaperLiteral) {
        value.penalty += g.distance;
      }
      sink(i, static_cast<int>(j), g, obstacles[j].radius, threat);
    }
  }
  return value;
}

}  // namespace

ClearanceReport avoidance_penalty(const ArmModel& arm, const JointConfig& q,
                                  const std::vector<Obstacle>& obstacles,
                                  int t, const AvoidanceParams& params) {
  ClearanceReport report;
  report.pairs.reserve(3 * obstacles.size());
  const AvoidanceValue v = accumulate_penalty(
      arm, q, obstacles, t, params,
      [&](int i, int j, const SegmentClearance& g, double r, bool threat) {
        report.pairs.push_back(PairClearance{i, j, g, r, threat});
      });
  report.penalty = v.penalty;
  report.threat_flag = v.threat_flag;
  return report;
}

AvoidanceValue avoidance_value(const ArmModel& arm, const JointConfig& q,
                               const std::vector<Obstacle>& obstacles, int t,
                               const AvoidanceParams& params) {
  return accumulate_penalty(arm, q, obstacles, t, params,
                            [](int, int, const SegmentClearance&, double,
                               bool) {});
}

}  // namespace armplan
