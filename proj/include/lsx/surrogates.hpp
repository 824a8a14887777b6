#pragma once

#include <string>
#include <vector>

#include "lsx/types.hpp"

namespace lsx {

struct LinearSurrogate {
  std::vector<double> coefficients;
  double intercept = 0.0;

  double predict(const Instance& x) const;
  int predict_label(const Instance& x) const { return predict(x) >= 0.5; }
};

/// Minimizes sum_i w_i (y_i - beta.x_i - b)^2 + lambda * |beta|^2 in closed
/// form on weight-centered data; the intercept is not penalized. Empty
/// `weights` means uniform. Throws on a singular system (raise lambda).
LinearSurrogate fit_weighted_ridge(const std::vector<Instance>& points,
                                   const std::vector<double>& targets,
                                   const std::vector<double>& weights = {},
                                   double lambda = 1e-6);

/// Coefficients as the attribution vector, unnormalized.
std::vector<double> attribution_of(const LinearSurrogate& s);

struct TreeSurrogate {
  struct Node {
    int feature = -1;       // -1 marks a leaf
    double threshold = 0.0;
    int left = -1;
    int right = -1;
    int leaf_class = -1;
  };
  std::vector<Node> nodes;  // nodes[0] is the root

  int predict_label(const Instance& x) const;
  int depth() const;
  /// Indented rule listing, one node per line ("feature <= threshold -> ...").
  std::string to_text(const std::vector<std::string>& feature_names) const;
};

/// CART on binary labels with weighted Gini impurity. Split candidates are
/// midpoints between consecutive sorted distinct values; ties broken by
/// lowest feature index, then lowest threshold.
TreeSurrogate fit_tree(const std::vector<Instance>& points,
                       const std::vector<int>& labels,
                       const std::vector<double>& weights = {},
                       int max_depth = 3, double min_leaf_weight = 1.0);

}  // namespace lsx
