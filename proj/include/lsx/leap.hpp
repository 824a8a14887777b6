#pragma once

#include <cstdint>
#include <vector>

#include "lsx/types.hpp"

namespace lsx {

struct LeapConfig {
  std::size_t k_lid = 20;
  std::size_t k_pca = 100;
  std::size_t sample_count = 5000;
  std::vector<double> subspace_sigma;  // empty = "auto": projected-neighbour std
  double gamma = 0.0;                  // <= 0 = "auto": (sqrt(out_dim))^0.75
};

/// Maximum-likelihood local intrinsic dimensionality from the k nearest
/// neighbour distances r_1 <= ... <= r_k of z_e (zero distances excluded):
/// LID = -((1/k) * sum_i ln(r_i / r_k))^-1.
double lid_estimate(const Dataset& data, const Instance& z_e, std::size_t k);

/// PCA fitted on the k_pca nearest training neighbours of z_e.
struct LocalPca {
  Instance mean;
  std::vector<Instance> components;  // out_dim rows, each of length d, orthonormal
  std::vector<double> variances;     // decreasing
  bool rank_reduced = false;

  std::size_t out_dim() const { return components.size(); }
  std::vector<double> project(const Instance& x) const;
  Instance reconstruct(const std::vector<double>& p) const;
};

LocalPca local_pca(const Dataset& data, const Instance& z_e, std::size_t k_pca,
                   std::size_t out_dim);

/// LIME in the LID-sized local PCA subspace: Gaussian samples around the
/// projected z_e, weighted by subspace distance, mapped back to R^d.
Neighbourhood leap_neighbourhood(const BlackBoxModel& model,
                                 const Dataset& data, const Instance& z_e,
                                 const LeapConfig& cfg, std::uint64_t seed);

}  // namespace lsx
