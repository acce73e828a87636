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

#include "armplan/scenario_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include "json.hpp"

namespace armplan {
namespace {

using json = nlohmann::json;

std::string child(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

std::string element(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ScenarioError(path + ": " + what);
}

void expect_object(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path.empty() ? "<root>" : path, "expected an object");
}

void reject_unknown_keys(const json& j, const std::string& path,
                         std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) fail(child(path, key), "unknown field");
  }
}

double as_number(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) fail(path, "must be finite");
  return v;
}

std::array<double, 3> as_triple(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 3) fail(path, "expected 3 numbers");
  return {as_number(j[0], element(path, 0)), as_number(j[1], element(path, 1)),
          as_number(j[2], element(path, 2))};
}

Eigen::Vector3d as_vector(const json& j, const std::string& path) {
  const auto t = as_triple(j, path);
  return {t[0], t[1], t[2]};
}

int as_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<int>();
}

const json* find(const json& obj, const char* key) {
  auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

const json& require(const json& obj, const char* key,
                    const std::string& path) {
  const json* j = find(obj, key);
  if (!j) fail(child(path, key), "missing required field");
  return *j;
}

ArmModel read_arm(const json& j) {
  const std::string path = "arm";
  expect_object(j, path);
  reject_unknown_keys(j, path,
                      {"link_lengths", "masses", "inertias", "gravity",
                       "joint_limits_deg", "max_step_deg"});
  ArmModel arm;
  arm.link_lengths = as_triple(require(j, "link_lengths", path),
                               child(path, "link_lengths"));
  if (const json* m = find(j, "masses")) {
    arm.masses = as_triple(*m, child(path, "masses"));
  }
  if (const json* i = find(j, "inertias")) {
    arm.inertias = as_triple(*i, child(path, "inertias"));
  }
  if (const json* g = find(j, "gravity")) {
    arm.gravity = as_number(*g, child(path, "gravity"));
  }
  if (const json* lim = find(j, "joint_limits_deg")) {
    const std::string lp = child(path, "joint_limits_deg");
    if (!lim->is_array() || lim->size() != 3) fail(lp, "expected 3 [min, max] pairs");
    for (std::size_t k = 0; k < 3; ++k) {
      const json& pair = (*lim)[k];
      const std::string pp = element(lp, k);
      if (!pair.is_array() || pair.size() != 2) fail(pp, "expected [min, max]");
      arm.joint_limits[k].min = as_number(pair[0], element(pp, 0)) * kDegToRad;
      arm.joint_limits[k].max = as_number(pair[1], element(pp, 1)) * kDegToRad;
    }
  }
  if (const json* s = find(j, "max_step_deg")) {
    arm.max_step = as_number(*s, child(path, "max_step_deg")) * kDegToRad;
  }
  return arm;
}

Obstacle read_obstacle(const json& j, const std::string& path) {
  expect_object(j, path);
  const json& shape = require(j, "shape", path);
  if (!shape.is_string()) fail(child(path, "shape"), "expected a string");
  Obstacle obs;
  obs.initial_center = as_vector(require(j, "center", path), child(path, "center"));
  if (const json* v = find(j, "velocity")) {
    obs.velocity = as_vector(*v, child(path, "velocity"));
  }
  const std::string kind = shape.get<std::string>();
  if (kind == "sphere") {
    reject_unknown_keys(j, path, {"shape", "center", "radius", "velocity"});
    obs.radius = as_number(require(j, "radius", path), child(path, "radius"));
    if (!(obs.radius > 0.0)) fail(child(path, "radius"), "must be > 0");
  } else if (kind == "cube") {
    reject_unknown_keys(j, path, {"shape", "center", "edge", "velocity"});
    const double edge = as_number(require(j, "edge", path), child(path, "edge"));
    if (!(edge > 0.0)) fail(child(path, "edge"), "must be > 0");
    obs.radius = circumsphere_radius_of_cube(edge);
  } else {
    fail(child(path, "shape"), "expected \"sphere\" or \"cube\"");
  }
  return obs;
}

void read_de(const json& j, de::Params& p) {
  const std::string path = "de";
  expect_object(j, path);
  reject_unknown_keys(j, path,
                      {"population_size", "scale_factor", "crossover_prob",
                       "max_iterations", "seed"});
  if (const json* v = find(j, "population_size")) {
    p.population_size = as_int(*v, child(path, "population_size"));
  }
  if (const json* v = find(j, "scale_factor")) {
    p.scale_factor = as_number(*v, child(path, "scale_factor"));
  }
  if (const json* v = find(j, "crossover_prob")) {
    p.crossover_prob = as_number(*v, child(path, "crossover_prob"));
  }
  if (const json* v = find(j, "max_iterations")) {
    p.max_iterations = as_int(*v, child(path, "max_iterations"));
  }
  if (const json* v = find(j, "seed")) {
    if (!v->is_number_unsigned()) fail(child(path, "seed"), "expected a non-negative integer");
    p.seed = v->get<std::uint64_t>();
  }
}

// Degree value that converts back to exactly `rad`, when one exists nearby.
double to_degrees_exact(double rad) {
  double deg = rad * kRadToDeg;
  if (deg * kDegToRad == rad) return deg;
  double up = deg;
  double down = deg;
  for (int i = 0; i < 8; ++i) {
    up = std::nextafter(up, INFINITY);
    down = std::nextafter(down, -INFINITY);
    if (up * kDegToRad == rad) return up;
    if (down * kDegToRad == rad) return down;
  }
  return deg;
}

json triple_json(double a, double b, double c) { return json::array({a, b, c}); }

json vector_json(const Eigen::Vector3d& v) { return triple_json(v.x(), v.y(), v.z()); }

const char* mode_name(AvoidanceMode mode) {
  return mode == AvoidanceMode::kPaperLiteral ? "paper_literal" : "zero_when_safe";
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  return out;
}

void check_written(std::ostream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace

PlanningProblem parse_scenario(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ScenarioError(std::string("<root>: parse error: ") + e.what());
  }
  expect_object(root, "");
  reject_unknown_keys(root, "",
                      {"arm", "start_deg", "goal", "obstacles", "horizon",
                       "thresholds", "n_f", "goal_tolerance", "avoidance_mode",
                       "cost_weights", "de"});

  PlanningProblem p;
  p.arm = read_arm(require(root, "arm", ""));
  const auto start = as_triple(require(root, "start_deg", ""), "start_deg");
  p.scenario.start = JointConfig(start[0] * kDegToRad, start[1] * kDegToRad,
                                 start[2] * kDegToRad);
  p.scenario.goal = as_vector(require(root, "goal", ""), "goal");

  if (const json* obs = find(root, "obstacles")) {
    if (!obs->is_array()) fail("obstacles", "expected an array");
    for (std::size_t j = 0; j < obs->size(); ++j) {
      p.scenario.obstacles.push_back(read_obstacle((*obs)[j], element("obstacles", j)));
    }
  }
  if (const json* v = find(root, "horizon")) p.scenario.horizon = as_int(*v, "horizon");
  if (const json* v = find(root, "thresholds")) {
    p.scenario.avoidance.thresholds = as_triple(*v, "thresholds");
  }
  if (const json* v = find(root, "n_f")) p.scenario.avoidance.n_f = as_number(*v, "n_f");
  if (const json* v = find(root, "goal_tolerance")) {
    p.scenario.goal_tolerance = as_number(*v, "goal_tolerance");
  }
  if (const json* v = find(root, "avoidance_mode")) {
    const std::string mode = v->is_string() ? v->get<std::string>() : "";
    if (mode == "zero_when_safe") {
      p.scenario.avoidance.mode = AvoidanceMode::kZeroWhenSafe;
    } else if (mode == "paper_literal") {
      p.scenario.avoidance.mode = AvoidanceMode::kPaperLiteral;
    } else {
      fail("avoidance_mode", "expected \"zero_when_safe\" or \"paper_literal\"");
    }
  }
  if (const json* w = find(root, "cost_weights")) {
    expect_object(*w, "cost_weights");
    reject_unknown_keys(*w, "cost_weights", {"energy", "distance", "avoidance"});
    auto& cw = p.scenario.weights;
    if (const json* v = find(*w, "energy")) cw.energy = as_number(*v, "cost_weights.energy");
    if (const json* v = find(*w, "distance")) cw.distance = as_number(*v, "cost_weights.distance");
    if (const json* v = find(*w, "avoidance")) cw.avoidance = as_number(*v, "cost_weights.avoidance");
  }
  if (const json* d = find(root, "de")) read_de(*d, p.de);

  try {
    p.arm.validate();
    p.scenario.validate(p.arm);
    p.de.validate_settings();
  } catch (const std::invalid_argument& e) {
    throw ScenarioError(e.what());
  }
  return p;
}

PlanningProblem load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ScenarioError(path.string() + ": cannot open scenario file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

std::string to_scenario_json(const PlanningProblem& p) {
  const ArmModel& arm = p.arm;
  const Scenario& s = p.scenario;
  json root;

  json a;
  a["link_lengths"] = triple_json(arm.link_lengths[0], arm.link_lengths[1],
                                  arm.link_lengths[2]);
  a["masses"] = triple_json(arm.masses[0], arm.masses[1], arm.masses[2]);
  if (arm.inertias) {
    a["inertias"] = triple_json((*arm.inertias)[0], (*arm.inertias)[1],
                                (*arm.inertias)[2]);
  }
  a["gravity"] = arm.gravity;
  json limits = json::array();
  for (const auto& lim : arm.joint_limits) {
    limits.push_back(json::array({to_degrees_exact(lim.min), to_degrees_exact(lim.max)}));
  }
  a["joint_limits_deg"] = limits;
  a["max_step_deg"] = to_degrees_exact(arm.max_step);
  root["arm"] = a;

  root["start_deg"] = triple_json(to_degrees_exact(s.start[0]),
                                  to_degrees_exact(s.start[1]),
                                  to_degrees_exact(s.start[2]));
  root["goal"] = vector_json(s.goal);
  json obstacles = json::array();
  for (const auto& o : s.obstacles) {
    obstacles.push_back({{"shape", "sphere"},
                         {"center", vector_json(o.initial_center)},
                         {"radius", o.radius},
                         {"velocity", vector_json(o.velocity)}});
  }
  root["obstacles"] = obstacles;
  root["horizon"] = s.horizon;
  root["thresholds"] = triple_json(s.avoidance.thresholds[0],
                                   s.avoidance.thresholds[1],
                                   s.avoidance.thresholds[2]);
  root["n_f"] = s.avoidance.n_f;
  root["goal_tolerance"] = s.goal_tolerance;
  root["avoidance_mode"] = mode_name(s.avoidance.mode);
  root["cost_weights"] = {{"energy", s.weights.energy},
                          {"distance", s.weights.distance},
                          {"avoidance", s.weights.avoidance}};
  root["de"] = {{"population_size", p.de.population_size},
                {"scale_factor", p.de.scale_factor},
                {"crossover_prob", p.de.crossover_prob},
                {"max_iterations", p.de.max_iterations},
                {"seed", p.de.seed}};
  return root.dump(2) + "\n";
}

void save_scenario(const PlanningProblem& problem,
                   const std::filesystem::path& path) {
  auto out = open_output(path);
  out << to_scenario_json(problem);
  check_written(out, path);
}

std::string format_number(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

void write_trajectory(const Trajectory& trajectory, std::ostream& out) {
  out << "step,t1_deg,t2_deg,t3_deg,x,y,z,dist_to_goal,delta_PE,KE,A_vd,"
         "total_cost,min_clearance,threat_flag\n";
  for (const StepRecord& r : trajectory.steps) {
    out << r.step;
    for (int k = 0; k < 3; ++k) out << ',' << format_number(r.q[k] * kRadToDeg);
    for (int k = 0; k < 3; ++k) out << ',' << format_number(r.end_effector[k]);
    out << ',' << format_number(r.cost.distance) << ','
        << format_number(r.cost.delta_potential) << ','
        << format_number(r.cost.kinetic) << ','
        << format_number(r.cost.avoidance) << ','
        << format_number(r.cost.total) << ','
        << format_number(r.min_clearance) << ',' << (r.cost.threat ? 1 : 0)
        << '\n';
  }
}

void write_trajectory(const Trajectory& trajectory,
                      const std::filesystem::path& path) {
  auto out = open_output(path);
  write_trajectory(trajectory, out);
  check_written(out, path);
}

void write_trace(const Trajectory& trajectory, std::ostream& out) {
  out << "step,iteration,best_cost\n";
  for (const StepRecord& r : trajectory.steps) {
    for (std::size_t g = 0; g < r.de_history.size(); ++g) {
      out << r.step << ',' << g + 1 << ',' << format_number(r.de_history[g])
          << '\n';
    }
  }
}

void write_trace(const Trajectory& trajectory,
                 const std::filesystem::path& path) {
  auto out = open_output(path);
  write_trace(trajectory, out);
  check_written(out, path);
}

}  // namespace armplan
