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
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include <Eigen/Core>

namespace armplan::de {

/// Box-constrained DE/rand/1/bin settings.
///
/// Bounds may coincide in a coordinate (a pinned dimension); they may not
/// cross.
struct Params {
  int population_size = 150;
  double scale_factor = 0.8;
  double crossover_prob = 0.96;
  int max_iterations = 100;
  Eigen::VectorXd lower;
  Eigen::VectorXd upper;
  std::uint64_t seed = 1;
  /// Stop once the best cost is at or below this value.
  std::optional<double> target_cost;

  int dimension() const { return static_cast<int>(lower.size()); }

  /// Checks population size, F, Cr and iteration count. Throws
  /// std::invalid_argument naming the offending field.
  void validate_settings() const;
  /// validate_settings() plus the bounds.
  void validate() const;
};

struct Result {
  Eigen::VectorXd best_vector;
  double best_cost = 0.0;
  /// Best-so-far cost after each generation.
  std::vector<double> history;
  long evaluations = 0;

  bool operator==(const Result& other) const {
    return best_vector == other.best_vector && best_cost == other.best_cost &&
           history == other.history && evaluations == other.evaluations;
  }
};

using Population = std::vector<Eigen::VectorXd>;
using CostFunction = std::function<double(const Eigen::VectorXd&)>;

/// Deterministic source for every stochastic draw of a run.
///
/// Built on mt19937_64 with hand-rolled conversions, so sequences do not
/// depend on the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }
  /// Uniform in [lo, hi]; returns lo exactly when lo == hi.
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [0, n).
  int index(int n);

 private:
  std::mt19937_64 engine_;
};

/// NP vectors drawn uniformly in the box, row by row.
Population initialize(const Params& params, Rng& rng);

/// x_r1 + F * (x_r2 - x_r3).
Eigen::VectorXd mutant_vector(const Eigen::VectorXd& base,
                              const Eigen::VectorXd& plus,
                              const Eigen::VectorXd& minus, double scale);

struct Mutation {
  Eigen::VectorXd vector;
  std::array<int, 3> donors{};  // r1, r2, r3
};

/// rand/1 mutation for `target`: three mutually distinct donors other than
/// the target, result clamped to [lower, upper].
Mutation mutate(const Population& population, int target, double scale,
                const Eigen::VectorXd& lower, const Eigen::VectorXd& upper,
                Rng& rng);

struct Crossover {
  Eigen::VectorXd vector;
  int forced_index = 0;  // j_rand
};

/// Binomial crossover. Draws j_rand first, then one uniform per coordinate.
Crossover crossover(const Eigen::VectorXd& target,
                    const Eigen::VectorXd& mutant, double crossover_prob,
                    Rng& rng);

/// Greedy one-to-one selection; the trial wins ties.
/// Throws std::domain_error on a non-finite cost.
bool trial_survives(double trial_cost, double target_cost);

const Eigen::VectorXd& select(const Eigen::VectorXd& target,
                              const Eigen::VectorXd& trial,
                              const CostFunction& cost);

/// Child seed for stream `index` of a master seed (splitmix64 finalizer).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

/// Full run: initialization, then up to max_iterations generations. Each
/// individual in turn is mutated, crossed over and selected in place.
/// Bit-reproducible for a given seed and cost function.
Result run(const CostFunction& cost, const Params& params);

}  // namespace armplan::de
