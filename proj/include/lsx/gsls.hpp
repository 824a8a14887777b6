#pragma once

#include <cstdint>
#include <vector>

#include "lsx/types.hpp"

namespace lsx {

struct GslsConfig {
  double radius = 0.0;      // <= 0 = "auto": half the counterfactual distance
  std::size_t sample_count = 5000;
  double eta = 0.1;         // growing-spheres step
  double max_radius = 0.0;  // <= 0 = "auto": 10 x data diameter (set by caller)
  std::size_t layer_samples = 200;
};

/// Nearest differently-classified instance found by growing spheres: shrink
/// the initial ball until enemy-free, then expand in [a, a+eta] layers and
/// return the closest enemy of the first layer that contains one.
/// Throws when no counterfactual exists within max_radius.
Instance growing_spheres_counterfactual(const BlackBoxModel& model,
                                        const Instance& z_e, double eta,
                                        double max_radius,
                                        std::size_t layer_samples,
                                        std::uint64_t seed);

/// s points uniform in the ball B(CF(z_e), r); no weights.
Neighbourhood gsls_neighbourhood(const BlackBoxModel& model,
                                 const Instance& z_e, const GslsConfig& cfg,
                                 std::uint64_t seed,
                                 Instance* counterfactual_out = nullptr);

}  // namespace lsx
