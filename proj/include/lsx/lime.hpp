#pragma once

#include <cstdint>
#include <vector>

#include "lsx/types.hpp"

namespace lsx {

struct LimeConfig {
  std::size_t sample_count = 5000;
  std::vector<double> sigma;  // empty = "auto": per-feature training std
  double gamma = 0.0;         // <= 0 = "auto": (sqrt(d))^0.75
};

double lime_auto_gamma(std::size_t d);

/// w_i = exp(-|z_i - z_e|^2 / gamma).
std::vector<double> lime_weights(const std::vector<Instance>& points,
                                 const Instance& z_e, double gamma);

/// s i.i.d. draws from the axis-aligned Gaussian N(z_e, diag(sigma^2)),
/// weighted by lime_weights.
Neighbourhood lime_neighbourhood(const BlackBoxModel& model,
                                 const Dataset& data, const Instance& z_e,
                                 const LimeConfig& cfg, std::uint64_t seed);

}  // namespace lsx
