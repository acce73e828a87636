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

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "armplan/differential_evolution.hpp"
#include "armplan/planner.hpp"

namespace armplan {

/// Everything a scenario file describes. `de.lower`/`de.upper` stay empty;
/// the planner fills them per step.
struct PlanningProblem {
  ArmModel arm;
  Scenario scenario;
  de::Params de;
};

/// Parse or validation failure. The message starts with the field path.
class ScenarioError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reads a JSON scenario. Angles are degrees in the file and radians in the
/// result; cube obstacles become their circumspheres.
PlanningProblem parse_scenario(const std::string& text);
PlanningProblem load_scenario(const std::filesystem::path& path);

/// Canonical JSON form. Obstacles are written as spheres and every field is
/// explicit, so parse_scenario(to_scenario_json(p)) == p.
std::string to_scenario_json(const PlanningProblem& problem);
void save_scenario(const PlanningProblem& problem,
                   const std::filesystem::path& path);

/// step,t1_deg,t2_deg,t3_deg,x,y,z,dist_to_goal,delta_PE,KE,A_vd,total_cost,
/// min_clearance,threat_flag
void write_trajectory(const Trajectory& trajectory, std::ostream& out);
void write_trajectory(const Trajectory& trajectory,
                      const std::filesystem::path& path);

/// step,iteration,best_cost: one row per DE generation of every step.
void write_trace(const Trajectory& trajectory, std::ostream& out);
void write_trace(const Trajectory& trajectory,
                 const std::filesystem::path& path);

/// %.12g, the number format of every CSV column.
std::string format_number(double value);

}  // namespace armplan
