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

#include "armplan/kinematics.hpp"

namespace armplan {

struct EnergyTerms {
  double potential = 0.0;
  double kinetic = 0.0;
  double delta_potential = 0.0;
};

/// Sum of m_k * g * z_k over the lumped mass points (shoulder, elbow, end
/// effector). Independent of t1.
double potential_energy(const ArmModel& arm, const JointConfig& q);

/// Sum of 0.5 * I_k * omega_k^2.
double kinetic_energy(const ArmModel& arm, const JointSpeeds& omega);

/// Energy terms of moving from q_prev to q_next in one unit of time.
/// `potential` is the potential energy at q_next.
EnergyTerms energy_terms(const ArmModel& arm, const JointConfig& q_prev,
                         const JointConfig& q_next);

/// |P(q_next) - P(q_prev)| + K(|q_next - q_prev|).
double energy_cost(const ArmModel& arm, const JointConfig& q_prev,
                   const JointConfig& q_next);

}  // namespace armplan
