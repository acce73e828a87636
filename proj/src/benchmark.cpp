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

#include "armplan/benchmark.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace armplan::bench {

TestFunction test_function(std::string_view name) {
  if (name == "sphere") {
    return {"sphere", -5.0, 5.0,
            [](const Eigen::VectorXd& x) { return x.squaredNorm(); }};
  }
  if (name == "rosenbrock") {
    return {"rosenbrock", -5.0, 10.0, [](const Eigen::VectorXd& x) {
              double f = 0.0;
              for (Eigen::Index j = 0; j + 1 < x.size(); ++j) {
                const double a = x[j + 1] - x[j] * x[j];
                const double b = 1.0 - x[j];
                f += 100.0 * a * a + b * b;
              }
              return f;
            }};
  }
  if (name == "rastrigin") {
    return {"rastrigin", -5.12, 5.12, [](const Eigen::VectorXd& x) {
              double f = 10.0 * static_cast<double>(x.size());
              for (Eigen::Index j = 0; j < x.size(); ++j) {
                f += x[j] * x[j] - 10.0 * std::cos(2.0 * std::numbers::pi * x[j]);
              }
              return f;
            }};
  }
  throw std::invalid_argument("unknown test function: " + std::string(name));
}

de::Params bench_params(const BenchSettings& s) {
  const TestFunction fn = test_function(s.function);
  if (s.dimension < 1) throw std::invalid_argument("dimension must be >= 1");
  de::Params p;
  p.population_size = s.population_size;
  p.max_iterations = s.max_iterations;
  p.scale_factor = s.scale_factor;
  p.crossover_prob = s.crossover_prob;
  p.seed = s.seed;
  p.lower = Eigen::VectorXd::Constant(s.dimension, fn.lower);
  p.upper = Eigen::VectorXd::Constant(s.dimension, fn.upper);
  return p;
}

de::Result run_benchmark(const BenchSettings& settings) {
  return de::run(test_function(settings.function).cost, bench_params(settings));
}

}  // namespace armplan::bench
