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

#include "armplan/energy.hpp"

#include <cmath>

namespace armplan {

double potential_energy(const ArmModel& arm, const JointConfig& q) {
  const JointPoints p = joint_points(arm, q);
  double total = 0.0;
  for (int k = 0; k < 3; ++k) {
    total += arm.masses[k] * arm.gravity * p[k + 1].z();
  }
  return total;
}

double kinetic_energy(const ArmModel& arm, const JointSpeeds& omega) {
  double total = 0.0;
  for (int k = 0; k < 3; ++k) {
    total += 0.5 * arm.inertia(k) * omega[k] * omega[k];
  }
  return total;
}

EnergyTerms energy_terms(const ArmModel& arm, const JointConfig& q_prev,
                         const JointConfig& q_next) {
  EnergyTerms terms;
  terms.potential = potential_energy(arm, q_next);
  terms.delta_potential =
      std::abs(terms.potential - potential_energy(arm, q_prev));
  terms.kinetic = kinetic_energy(arm, angular_velocity(q_prev, q_next));
  return terms;
}

double energy_cost(const ArmModel& arm, const JointConfig& q_prev,
                   const JointConfig& q_next) {
  const EnergyTerms terms = energy_terms(arm, q_prev, q_next);
  return terms.delta_potential + terms.kinetic;
}

}  // namespace armplan
