#pragma once

#include <cstdint>
#include <vector>

#include "lsx/types.hpp"

namespace lsx {

struct LoreConfig {
  std::size_t size = 400;  // total neighbourhood size, split evenly per GA
  std::size_t population = 200;
  std::size_t generations = 20;
  double crossover_prob = 0.5;
  double mutation_prob = 0.2;
  std::size_t tournament = 3;
  std::size_t elitism = 2;
};

enum class LoreTarget { same_class, different_class };

/// Mixture distance in [0, 1]: simple matching over categorical features and
/// range-scaled euclidean over continuous ones, each weighted by its share
/// of the d features.
double lore_distance(const Instance& x, const Instance& z,
                     const std::vector<FeatureMeta>& meta);

/// fitness_= = 1[f(z_e)=f(z)] + (1 - distance) - 1[z_e = z]; fitness_!= swaps
/// the first indicator to inequality. `distance` is d(z_e, z) in [0, 1].
double lore_fitness(const Instance& z, const Instance& z_e, LoreTarget target,
                    const BlackBoxModel& model, double distance);

/// Per-generation best fitness of the two GA runs, for monotonicity checks.
struct LoreTrace {
  std::vector<double> best_same;
  std::vector<double> best_diff;
  bool opposite_class_found = true;
};

/// Two genetic-algorithm runs seeded with copies of z_e, one per fitness;
/// final populations truncated to size/2 each and concatenated. No weights.
Neighbourhood lore_neighbourhood(const BlackBoxModel& model,
                                 const Dataset& data, const Instance& z_e,
                                 const LoreConfig& cfg, std::uint64_t seed,
                                 LoreTrace* trace = nullptr);

}  // namespace lsx
