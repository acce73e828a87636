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

#include "armplan/differential_evolution.hpp"

#include <cassert>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace armplan::de {

void Params::validate_settings() const {
  if (population_size < 4) {
    throw std::invalid_argument("de.population_size must be >= 4");
  }
  if (!(scale_factor >= 0.0 && scale_factor <= 2.0)) {
    throw std::invalid_argument("de.scale_factor must lie in [0, 2]");
  }
  if (!(crossover_prob >= 0.0 && crossover_prob <= 1.0)) {
    throw std::invalid_argument("de.crossover_prob must lie in [0, 1]");
  }
  if (max_iterations < 1) {
    throw std::invalid_argument("de.max_iterations must be >= 1");
  }
}

void Params::validate() const {
  validate_settings();
  if (lower.size() == 0 || lower.size() != upper.size()) {
    throw std::invalid_argument(
        "de bounds must be non-empty and of equal dimension");
  }
  for (Eigen::Index j = 0; j < lower.size(); ++j) {
    if (!std::isfinite(lower[j]) || !std::isfinite(upper[j]) ||
        !(lower[j] <= upper[j])) {
      throw std::invalid_argument("de bounds[" + std::to_string(j) +
                                  "]: lower must be <= upper");
    }
  }
}

int Rng::index(int n) {
  assert(n > 0);
  const auto range = static_cast<std::uint64_t>(n);
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t draw;
  do {
    draw = engine_();
  } while (draw >= limit);
  return static_cast<int>(draw % range);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + (index + 1) * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Population initialize(const Params& params, Rng& rng) {
  const int dim = params.dimension();
  Population pop(params.population_size, Eigen::VectorXd(dim));
  for (auto& x : pop) {
    for (int j = 0; j < dim; ++j) {
      x[j] = rng.uniform(params.lower[j], params.upper[j]);
    }
  }
  return pop;
}

Eigen::VectorXd mutant_vector(const Eigen::VectorXd& base,
                              const Eigen::VectorXd& plus,
                              const Eigen::VectorXd& minus, double scale) {
  return base + scale * (plus - minus);
}

Mutation mutate(const Population& population, int target, double scale,
                const Eigen::VectorXd& lower, const Eigen::VectorXd& upper,
                Rng& rng) {
  const int np = static_cast<int>(population.size());
  if (np < 4) throw std::invalid_argument("mutation needs at least 4 vectors");

  Mutation m;
  for (int k = 0; k < 3; ++k) {
    int r;
    do {
      r = rng.index(np);
    } while (r == target || (k > 0 && r == m.donors[0]) ||
             (k > 1 && r == m.donors[1]));
    m.donors[k] = r;
  }
  assert(m.donors[0] != m.donors[1] && m.donors[1] != m.donors[2] &&
         m.donors[0] != m.donors[2]);

  m.vector = mutant_vector(population[m.donors[0]], population[m.donors[1]],
                           population[m.donors[2]], scale)
                 .cwiseMax(lower)
                 .cwiseMin(upper);
  return m;
}

Crossover crossover(const Eigen::VectorXd& target,
                    const Eigen::VectorXd& mutant, double crossover_prob,
                    Rng& rng) {
  if (target.size() != mutant.size()) {
    throw std::invalid_argument("crossover vectors differ in dimension");
  }
  const int dim = static_cast<int>(target.size());
  Crossover c;
  c.forced_index = rng.index(dim);
  c.vector = target;
  for (int j = 0; j < dim; ++j) {
    const double u = rng.uniform();
    if (u <= crossover_prob || j == c.forced_index) c.vector[j] = mutant[j];
  }
  return c;
}

bool trial_survives(double trial_cost, double target_cost) {
  if (!std::isfinite(trial_cost) || !std::isfinite(target_cost)) {
    throw std::domain_error("cost function returned a non-finite value");
  }
  return trial_cost <= target_cost;
}

const Eigen::VectorXd& select(const Eigen::VectorXd& target,
                              const Eigen::VectorXd& trial,
                              const CostFunction& cost) {
  return trial_survives(cost(trial), cost(target)) ? trial : target;
}

Result run(const CostFunction& cost, const Params& params) {
  params.validate();
  Rng rng(params.seed);
  const int np = params.population_size;

  Result result;
  Population pop = initialize(params, rng);
  std::vector<double> costs(np);
  int best = 0;
  for (int i = 0; i < np; ++i) {
    costs[i] = cost(pop[i]);
    if (!std::isfinite(costs[i])) {
      throw std::domain_error("cost function returned a non-finite value");
    }
    if (costs[i] < costs[best]) best = i;
  }
  result.evaluations = np;
  result.history.reserve(params.max_iterations);

  for (int gen = 0; gen < params.max_iterations; ++gen) {
    // Survivors replace their target immediately, so later individuals of the
    // same generation already mutate from them.
    for (int i = 0; i < np; ++i) {
      const Mutation m = mutate(pop, i, params.scale_factor, params.lower,
                                params.upper, rng);
      Eigen::VectorXd trial =
          crossover(pop[i], m.vector, params.crossover_prob, rng).vector;
      const double trial_cost = cost(trial);
      if (trial_survives(trial_cost, costs[i])) {
        pop[i] = std::move(trial);
        costs[i] = trial_cost;
        if (costs[i] < costs[best]) best = i;
      }
    }
    result.evaluations += np;
    result.history.push_back(costs[best]);
    if (params.target_cost && costs[best] <= *params.target_cost) break;
  }

  result.best_vector = pop[best];
  result.best_cost = costs[best];
  return result;
}

}  // namespace armplan::de
