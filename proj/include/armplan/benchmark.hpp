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

#include <string>
#include <string_view>

#include "armplan/differential_evolution.hpp"

namespace armplan::bench {

struct TestFunction {
  std::string name;
  double lower = 0.0;
  double upper = 0.0;
  de::CostFunction cost;
};

/// "sphere" ([-5, 5]), "rosenbrock" ([-5, 10]) or "rastrigin"
/// ([-5.12, 5.12]). Throws std::invalid_argument for other names.
TestFunction test_function(std::string_view name);

struct BenchSettings {
  std::string function = "sphere";
  int dimension = 6;
  int population_size = 150;
  int max_iterations = 100;
  double scale_factor = 0.8;
  double crossover_prob = 0.96;
  std::uint64_t seed = 1;
};

de::Params bench_params(const BenchSettings& settings);

de::Result run_benchmark(const BenchSettings& settings);

}  // namespace armplan::bench
