#include "lsx/surrogates.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "lsx/util.hpp"

namespace lsx {

double LinearSurrogate::predict(const Instance& x) const {
  double y = intercept;
  for (std::size_t i = 0; i < coefficients.size(); ++i) y += coefficients[i] * x[i];
  return y;
}

LinearSurrogate fit_weighted_ridge(const std::vector<Instance>& points,
                                   const std::vector<double>& targets,
                                   const std::vector<double>& weights,
                                   double lambda) {
  if (points.empty()) throw std::invalid_argument("ridge: no points");
  if (points.size() != targets.size()) {
    throw std::invalid_argument("ridge: points/targets length mismatch");
  }
  if (!weights.empty() && weights.size() != points.size()) {
    throw std::invalid_argument("ridge: weights length mismatch");
  }
  if (lambda < 0.0) throw std::invalid_argument("ridge: lambda must be >= 0");

  const std::size_t n = points.size();
  const std::size_t d = points.front().size();

  double wsum = 0.0;
  auto weight_at = [&weights](std::size_t i) {
    return weights.empty() ? 1.0 : weights[i];
  };
  for (std::size_t i = 0; i < n; ++i) wsum += weight_at(i);
  if (wsum <= 0.0) throw std::invalid_argument("ridge: weight sum must be > 0");

  Eigen::VectorXd mean_x = Eigen::VectorXd::Zero(static_cast<long>(d));
  double mean_y = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double w = weight_at(i);
    for (std::size_t j = 0; j < d; ++j) mean_x[static_cast<long>(j)] += w * points[i][j];
    mean_y += w * targets[i];
  }
  mean_x /= wsum;
  mean_y /= wsum;

  Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(static_cast<long>(d), static_cast<long>(d));
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(static_cast<long>(d));
  Eigen::VectorXd xc(static_cast<long>(d));
  for (std::size_t i = 0; i < n; ++i) {
    const double w = weight_at(i);
    if (w == 0.0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      xc[static_cast<long>(j)] = points[i][j] - mean_x[static_cast<long>(j)];
    }
    gram.selfadjointView<Eigen::Lower>().rankUpdate(xc, w);
    rhs += (w * (targets[i] - mean_y)) * xc;
  }
  gram = gram.selfadjointView<Eigen::Lower>();
  gram.diagonal().array() += lambda;

  Eigen::LDLT<Eigen::MatrixXd> ldlt(gram);
  const Eigen::VectorXd dvec = ldlt.vectorD();
  const double dmax = dvec.cwiseAbs().maxCoeff();
  const double dmin = dvec.cwiseAbs().minCoeff();
  if (ldlt.info() != Eigen::Success || dmax <= 0.0 || dmin <= dmax * 1e-13) {
    throw std::runtime_error("ridge: singular system (raise lambda)");
  }
  const Eigen::VectorXd beta = ldlt.solve(rhs);

  LinearSurrogate s;
  s.coefficients.assign(beta.data(), beta.data() + beta.size());
  s.intercept = mean_y - beta.dot(mean_x);
  for (double c : s.coefficients) {
    if (!std::isfinite(c)) throw std::runtime_error("ridge: non-finite coefficients");
  }
  return s;
}

std::vector<double> attribution_of(const LinearSurrogate& s) {
  return s.coefficients;
}

namespace {

struct TreeBuilder {
  const std::vector<Instance>& points;
  const std::vector<int>& labels;
  const std::vector<double>& weights;
  int max_depth;
  double min_leaf_weight;
  std::vector<TreeSurrogate::Node> nodes;

  double weight_at(std::size_t i) const {
    return weights.empty() ? 1.0 : weights[i];
  }

  static double gini(double w0, double w1) {
    const double total = w0 + w1;
    if (total <= 0.0) return 0.0;
    const double p0 = w0 / total, p1 = w1 / total;
    return 1.0 - p0 * p0 - p1 * p1;
  }

  int majority(const std::vector<std::size_t>& idx) const {
    double w0 = 0.0, w1 = 0.0;
    for (std::size_t i : idx) (labels[i] ? w1 : w0) += weight_at(i);
    return w1 > w0 ? 1 : 0;
  }

  struct Split {
    bool found = false;
    std::size_t feature = 0;
    double threshold = 0.0;
    double impurity_decrease = 0.0;
  };

  Split best_split(const std::vector<std::size_t>& idx) const {
    double w0 = 0.0, w1 = 0.0;
    for (std::size_t i : idx) (labels[i] ? w1 : w0) += weight_at(i);
    const double total = w0 + w1;
    const double parent_impurity = gini(w0, w1);
    Split best;
    if (parent_impurity <= 0.0 || total <= 0.0) return best;

    const std::size_t d = points[idx.front()].size();
    std::vector<std::size_t> order(idx);
    for (std::size_t f = 0; f < d; ++f) {
      std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return points[a][f] < points[b][f];
      });
      double lw0 = 0.0, lw1 = 0.0;
      for (std::size_t k = 0; k + 1 < order.size(); ++k) {
        const std::size_t i = order[k];
        (labels[i] ? lw1 : lw0) += weight_at(i);
        const double v = points[i][f];
        const double next = points[order[k + 1]][f];
        if (next <= v) continue;  // candidate only between distinct values
        const double threshold = v + 0.5 * (next - v);
        const double lw = lw0 + lw1, rw = total - lw;
        if (lw < min_leaf_weight || rw < min_leaf_weight) continue;
        const double child_impurity =
            (lw / total) * gini(lw0, lw1) + (rw / total) * gini(w0 - lw0, w1 - lw1);
        const double decrease = parent_impurity - child_impurity;
        // Features and thresholds are visited in increasing order, so a
        // strictly-better rule keeps the lowest (feature, threshold) on ties.
        if (decrease > best.impurity_decrease && decrease > 1e-12) {
          best = {true, f, threshold, decrease};
        }
      }
    }
    return best;
  }

  int build(const std::vector<std::size_t>& idx, int depth) {
    TreeSurrogate::Node node;
    const Split split = depth < max_depth ? best_split(idx) : Split{};
    if (!split.found) {
      node.leaf_class = majority(idx);
      nodes.push_back(node);
      return static_cast<int>(nodes.size()) - 1;
    }
    std::vector<std::size_t> left_idx, right_idx;
    for (std::size_t i : idx) {
      (points[i][split.feature] <= split.threshold ? left_idx : right_idx)
          .push_back(i);
    }
    node.feature = static_cast<int>(split.feature);
    node.threshold = split.threshold;
    const std::size_t self = nodes.size();
    nodes.push_back(node);
    const int left = build(left_idx, depth + 1);
    const int right = build(right_idx, depth + 1);
    nodes[self].left = left;
    nodes[self].right = right;
    return static_cast<int>(self);
  }
};

}  // namespace

int TreeSurrogate::predict_label(const Instance& x) const {
  int i = 0;
  while (nodes[static_cast<std::size_t>(i)].feature >= 0) {
    const Node& n = nodes[static_cast<std::size_t>(i)];
    i = x[static_cast<std::size_t>(n.feature)] <= n.threshold ? n.left : n.right;
  }
  return nodes[static_cast<std::size_t>(i)].leaf_class;
}

int TreeSurrogate::depth() const {
  std::function<int(int)> walk = [&](int i) -> int {
    const Node& n = nodes[static_cast<std::size_t>(i)];
    if (n.feature < 0) return 0;
    return 1 + std::max(walk(n.left), walk(n.right));
  };
  return nodes.empty() ? 0 : walk(0);
}

std::string TreeSurrogate::to_text(
    const std::vector<std::string>& feature_names) const {
  std::ostringstream out;
  std::function<void(int, int)> walk = [&](int i, int indent) {
    const Node& n = nodes[static_cast<std::size_t>(i)];
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    if (n.feature < 0) {
      out << pad << "-> class " << n.leaf_class << "\n";
      return;
    }
    const std::string name =
        static_cast<std::size_t>(n.feature) < feature_names.size()
            ? feature_names[static_cast<std::size_t>(n.feature)]
            : "f" + std::to_string(n.feature);
    out << pad << "if " << name << " <= " << format_double(n.threshold) << "\n";
    walk(n.left, indent + 1);
    out << pad << "else\n";
    walk(n.right, indent + 1);
  };
  if (!nodes.empty()) walk(0, 0);
  return out.str();
}

TreeSurrogate fit_tree(const std::vector<Instance>& points,
                       const std::vector<int>& labels,
                       const std::vector<double>& weights, int max_depth,
                       double min_leaf_weight) {
  if (points.empty()) throw std::invalid_argument("tree: empty input");
  if (points.size() != labels.size()) {
    throw std::invalid_argument("tree: points/labels length mismatch");
  }
  if (!weights.empty() && weights.size() != points.size()) {
    throw std::invalid_argument("tree: weights length mismatch");
  }
  if (max_depth < 1) throw std::invalid_argument("tree: max depth must be >= 1");
  for (int label : labels) {
    if (label != 0 && label != 1) {
      throw std::invalid_argument("tree: labels must be binary");
    }
  }

  TreeBuilder builder{points, labels, weights, max_depth, min_leaf_weight, {}};
  std::vector<std::size_t> idx(points.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  builder.build(idx, 0);
  TreeSurrogate tree;
  tree.nodes = std::move(builder.nodes);
  return tree;
}

}  // namespace lsx
