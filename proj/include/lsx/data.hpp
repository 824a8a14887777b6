#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lsx/types.hpp"

namespace lsx {

struct HalfMoonsSpec {
  std::size_t n = 1000;
  double noise = 0.2;   // Gaussian std added to both coordinates
  std::uint64_t seed = 0;
};

/// Two interleaving unit-radius arcs: class 0 at (cos t, sin t), class 1 at
/// (1 - cos t, 0.5 - sin t), t evenly spaced on [0, pi], plus isotropic
/// Gaussian noise. ceil(n/2) rows of class 0 first, then floor(n/2) of class 1.
Dataset generate_half_moons(const HalfMoonsSpec& spec);

/// predict_label evaluated at the centers of a resolution x resolution grid
/// over [xmin,xmax] x [ymin,ymax]; row-major, row r sweeps y upward.
struct GridBounds {
  double xmin, xmax, ymin, ymax;
};
std::vector<int> decision_grid(const BlackBoxModel& model,
                               const GridBounds& bounds, std::size_t resolution);

/// CSV with a header row, '.' decimal separator, optional final `label`
/// column restricted to {0,1}.
Dataset load_csv(const std::string& path);
void save_csv(const Dataset& data, const std::string& path);

}  // namespace lsx
