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

#include "armplan/kinematics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace armplan {

double ArmModel::inertia(int k) const {
  if (inertias) return (*inertias)[k];
  return masses[k] * link_lengths[k] * link_lengths[k];
}

bool ArmModel::within_limits(const JointConfig& q) const {
  for (int k = 0; k < 3; ++k) {
    if (!joint_limits[k].contains(q[k])) return false;
  }
  return true;
}

void ArmModel::validate() const {
  for (int k = 0; k < 3; ++k) {
    const std::string idx = "[" + std::to_string(k) + "]";
    if (!(link_lengths[k] > 0.0) || !std::isfinite(link_lengths[k])) {
      throw std::invalid_argument("arm.link_lengths" + idx +
                                  " must be finite and > 0");
    }
    if (!(masses[k] >= 0.0) || !std::isfinite(masses[k])) {
      throw std::invalid_argument("arm.masses" + idx +
                                  " must be finite and >= 0");
    }
    if (inertias && (!((*inertias)[k] >= 0.0) ||
                     !std::isfinite((*inertias)[k]))) {
      throw std::invalid_argument("arm.inertias" + idx +
                                  " must be finite and >= 0");
    }
    const auto& lim = joint_limits[k];
    if (!std::isfinite(lim.min) || !std::isfinite(lim.max) ||
        !(lim.min < lim.max)) {
      throw std::invalid_argument("arm.joint_limits_deg" + idx +
                                  ": min must be < max");
    }
  }
  if (!std::isfinite(gravity)) {
    throw std::invalid_argument("arm.gravity must be finite");
  }
  if (!(max_step > 0.0) || !std::isfinite(max_step)) {
    throw std::invalid_argument("arm.max_step_deg must be finite and > 0");
  }
}

namespace {

// Horizontal reach and height of a point at distance `len` along a link
// whose direction makes angle `phi` with +z.
inline Point3 link_offset(double t1, double phi, double len) {
  const double reach = len * std::sin(phi);
  return {std::sin(t1) * reach, std::cos(t1) * reach, len * std::cos(phi)};
}

}  // namespace

Point3 end_effector(const ArmModel& arm, const JointConfig& q) {
  const auto& L = arm.link_lengths;
  const double reach = L[1] * std::sin(q[1]) + L[2] * std::sin(q[1] + q[2]);
  return {std::sin(q[0]) * reach, std::cos(q[0]) * reach,
          L[0] + L[1] * std::cos(q[1]) + L[2] * std::cos(q[1] + q[2])};
}

JointPoints joint_points(const ArmModel& arm, const JointConfig& q) {
  const auto& L = arm.link_lengths;
  JointPoints p;
  p[0] = Point3::Zero();
  p[1] = Point3(0.0, 0.0, L[0]);
  p[2] = p[1] + link_offset(q[0], q[1], L[1]);
  p[3] = end_effector(arm, q);
  return p;
}

JointSpeeds angular_velocity(const JointConfig& q_prev,
                             const JointConfig& q_next) {
  return (q_next.angles - q_prev.angles).cwiseAbs();
}

}  // namespace armplan
