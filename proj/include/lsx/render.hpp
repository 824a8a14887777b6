#pragma once

#include <string>
#include <vector>

#include "lsx/data.hpp"
#include "lsx/types.hpp"

namespace lsx {

/// One sub-plot of the neighbourhood comparison figure.
struct Panel {
  std::string title;
  GridBounds bounds{};          // shared across panels; must enclose everything
  std::vector<int> grid;        // decision_grid raster over `bounds`, row-major
  std::size_t grid_resolution = 0;
  std::vector<Instance> data_points;
  std::vector<int> data_labels;
  std::vector<Instance> neigh_points;
  std::vector<double> neigh_weights;  // empty = flat colour
  Instance star;                      // the explained instance
};

/// Padded box enclosing the star, data and neighbourhood points of every panel.
GridBounds shared_bounds(const std::vector<Panel>& panels, double pad_frac = 0.04);

/// Self-contained SVG (rect, circle, path, text, g only), one sub-plot per
/// panel on shared axis bounds. Weighted points get fill-opacity affine in
/// the weight so darkness ordering equals weight ordering; unweighted points
/// are a single flat colour. Deterministic bytes for fixed inputs.
void render_neighbourhood_panels(const std::vector<Panel>& panels,
                                 std::size_t rows, std::size_t cols,
                                 const std::string& path,
                                 const std::string& provenance = "");

/// Grouped horizontal bars per feature per method, signed, features sorted
/// by max |attribution|; zero line drawn.
void render_attribution_bars(const std::vector<Explanation>& explanations,
                             const std::vector<std::string>& feature_names,
                             const std::string& path,
                             const std::string& provenance = "");

}  // namespace lsx
