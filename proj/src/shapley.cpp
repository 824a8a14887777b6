#include "lsx/shapley.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>

#include "lsx/util.hpp"

namespace lsx {

namespace {

double binomial(std::size_t n, std::size_t k) {
  double result = 1.0;
  for (std::size_t i = 1; i <= k; ++i) {
    result *= static_cast<double>(n - i + 1) / static_cast<double>(i);
  }
  return result;
}

Instance hybrid(const Instance& z_e, const Instance& bg, CoalitionMask mask) {
  Instance out(z_e.size());
  for (std::size_t j = 0; j < z_e.size(); ++j) {
    out[j] = (mask >> j) & 1u ? z_e[j] : bg[j];
  }
  return out;
}

void check_cap(std::size_t d, const char* what) {
  if (d > kShapleyEnumerationCap) {
    throw std::invalid_argument(std::string(what) +
                                ": d exceeds the enumeration cap (" +
                                std::to_string(kShapleyEnumerationCap) +
                                "); use the sampled estimator");
  }
}

}  // namespace

double shapley_kernel_weight(std::size_t d, std::size_t s) {
  if (d < 2) throw std::invalid_argument("shapley kernel: d must be >= 2");
  if (s == 0 || s >= d) {
    throw std::invalid_argument(
        "shapley kernel: s must be in [1, d-1] (empty/full coalitions are "
        "handled as constraints)");
  }
  return static_cast<double>(d - 1) /
         (binomial(d, s) * static_cast<double>(s) * static_cast<double>(d - s));
}

double coalition_value(const BlackBoxModel& model, const Instance& z_e,
                       CoalitionMask mask, const Background& background) {
  if (background.rows.empty()) {
    throw std::invalid_argument("coalition_value: empty background");
  }
  const std::size_t d = z_e.size();
  const CoalitionMask full = d >= 32 ? ~CoalitionMask{0}
                                     : (CoalitionMask{1} << d) - 1;
  if ((mask & full) == full) return model.predict_proba(z_e);
  double total = 0.0;
  for (const auto& row : background.rows) {
    total += model.predict_proba(hybrid(z_e, row, mask));
  }
  return total / static_cast<double>(background.size());
}

namespace {

ShapleyResult solve_problem(const ShapleyProblem& p) {
  const std::size_t d = p.d;
  const double total = p.full_value - p.base_value;
  ShapleyResult result;
  result.base_value = p.base_value;
  if (d == 1) {
    result.phi = {total};
    return result;
  }

  // Eliminate phi_{d-1} via sum(phi) = full - base, then solve the reduced
  // weighted normal equations (SPD).
  const long cols = static_cast<long>(d) - 1;
  Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(cols, cols);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(cols);
  Eigen::VectorXd row(cols);
  for (std::size_t r = 0; r < p.masks.size(); ++r) {
    const CoalitionMask mask = p.masks[r];
    const double last = (mask >> (d - 1)) & 1u ? 1.0 : 0.0;
    for (long j = 0; j < cols; ++j) {
      row[j] = (((mask >> j) & 1u) ? 1.0 : 0.0) - last;
    }
    const double target = p.targets[r] - p.base_value - total * last;
    gram.selfadjointView<Eigen::Lower>().rankUpdate(row, p.weights[r]);
    rhs += (p.weights[r] * target) * row;
  }
  gram = gram.selfadjointView<Eigen::Lower>();

  Eigen::LDLT<Eigen::MatrixXd> ldlt(gram);
  const Eigen::VectorXd dvec = ldlt.vectorD().cwiseAbs();
  const double dmax = dvec.maxCoeff();
  if (ldlt.info() != Eigen::Success || dmax <= 0.0 ||
      dvec.minCoeff() <= dmax * 1e-12) {
    throw std::runtime_error(
        "kernelshap: singular reduced system (degenerate sampling; increase m)");
  }
  const Eigen::VectorXd phi_reduced = ldlt.solve(rhs);

  result.phi.assign(phi_reduced.data(), phi_reduced.data() + phi_reduced.size());
  double partial = 0.0;
  for (double v : result.phi) partial += v;
  result.phi.push_back(total - partial);
  return result;
}

std::vector<CoalitionMask> all_proper_masks(std::size_t d) {
  const CoalitionMask full = (CoalitionMask{1} << d) - 1;
  std::vector<CoalitionMask> masks;
  masks.reserve((std::size_t{1} << d) - 2);
  for (CoalitionMask m = 1; m < full; ++m) masks.push_back(m);
  return masks;
}

std::vector<CoalitionMask> sample_masks(std::size_t d, std::size_t m,
                                        std::uint64_t seed) {
  const std::size_t available = (std::size_t{1} << d) - 2;
  if (m > available) m = available;

  // Size distribution proportional to the total kernel mass per size:
  // C(d,s) * k(d,s) = (d-1)/(s*(d-s)).
  std::vector<double> size_mass(d, 0.0);
  for (std::size_t s = 1; s <= d - 1; ++s) {
    size_mass[s] = static_cast<double>(d - 1) /
                   (static_cast<double>(s) * static_cast<double>(d - s));
  }
  std::discrete_distribution<std::size_t> size_dist(size_mass.begin(),
                                                    size_mass.end());
  Rng rng(seed);
  std::set<CoalitionMask> chosen;
  std::vector<std::size_t> features(d);
  std::iota(features.begin(), features.end(), std::size_t{0});
  while (chosen.size() < m) {
    const std::size_t s = size_dist(rng);
    // Uniform subset of size s: partial Fisher-Yates over feature indices.
    for (std::size_t i = 0; i < s; ++i) {
      std::uniform_int_distribution<std::size_t> pick(i, d - 1);
      std::swap(features[i], features[pick(rng)]);
    }
    CoalitionMask mask = 0;
    for (std::size_t i = 0; i < s; ++i) mask |= CoalitionMask{1} << features[i];
    chosen.insert(mask);
  }
  return {chosen.begin(), chosen.end()};
}

}  // namespace

ShapleyResult kernelshap_solve(const BlackBoxModel& model, const Instance& z_e,
                               const Background& background, SubsetSource source,
                               std::size_t sample_m, std::uint64_t seed,
                               ShapleyProblem* problem_out) {
  const std::size_t d = z_e.size();
  if (d == 0) throw std::invalid_argument("kernelshap: d must be >= 1");
  if (d > 31) throw std::invalid_argument("kernelshap: d exceeds mask width");
  if (background.rows.empty()) {
    throw std::invalid_argument("kernelshap: empty background");
  }

  ShapleyProblem p;
  p.d = d;
  p.base_value = coalition_value(model, z_e, 0, background);
  const CoalitionMask full = (CoalitionMask{1} << d) - 1;
  p.full_value = coalition_value(model, z_e, full, background);

  if (d > 1) {
    if (source == SubsetSource::full_enumeration) {
      check_cap(d, "kernelshap full enumeration");
      p.masks = all_proper_masks(d);
    } else {
      if (sample_m < d) {
        throw std::invalid_argument("kernelshap sampled mode: need m >= d");
      }
      p.masks = sample_masks(d, sample_m, seed);
    }
    p.weights.reserve(p.masks.size());
    p.targets.reserve(p.masks.size());
    for (const CoalitionMask mask : p.masks) {
      const auto s = static_cast<std::size_t>(std::popcount(mask));
      p.weights.push_back(shapley_kernel_weight(d, s));
      p.targets.push_back(coalition_value(model, z_e, mask, background));
    }
  }

  ShapleyResult result = solve_problem(p);
  if (problem_out) *problem_out = std::move(p);
  return result;
}

ShapleyResult exact_shapley(const BlackBoxModel& model, const Instance& z_e,
                            const Background& background) {
  const std::size_t d = z_e.size();
  if (d == 0) throw std::invalid_argument("exact_shapley: d must be >= 1");
  check_cap(d, "exact_shapley");
  if (background.rows.empty()) {
    throw std::invalid_argument("exact_shapley: empty background");
  }

  const std::size_t n_masks = std::size_t{1} << d;
  std::vector<double> value(n_masks);
  for (std::size_t mask = 0; mask < n_masks; ++mask) {
    value[mask] = coalition_value(model, z_e, static_cast<CoalitionMask>(mask),
                                  background);
  }

  std::vector<double> factorial(d + 1, 1.0);
  for (std::size_t i = 1; i <= d; ++i) {
    factorial[i] = factorial[i - 1] * static_cast<double>(i);
  }

  ShapleyResult result;
  result.base_value = value[0];
  result.phi.assign(d, 0.0);
  for (std::size_t i = 0; i < d; ++i) {
    const CoalitionMask bit = CoalitionMask{1} << i;
    for (std::size_t mask = 0; mask < n_masks; ++mask) {
      if (mask & bit) continue;
      const auto q = static_cast<std::size_t>(std::popcount(mask));
      const double coeff = factorial[q] * factorial[d - q - 1] / factorial[d];
      result.phi[i] += coeff * (value[mask | bit] - value[mask]);
    }
  }
  return result;
}

Neighbourhood kernelshap_neighbourhood(const BlackBoxModel& model,
                                       const Dataset& data, const Instance& z_e,
                                       std::vector<CoalitionMask>* masks_out) {
  const std::size_t d = z_e.size();
  if (d < 2) throw std::invalid_argument("kernelshap neighbourhood: d must be >= 2");
  check_cap(d, "kernelshap neighbourhood");
  if (data.rows.empty()) {
    throw std::invalid_argument("kernelshap neighbourhood: empty data");
  }

  const auto masks = all_proper_masks(d);
  Neighbourhood n;
  n.strategy = Strategy::kernelshap;
  n.points.reserve(data.rows.size() * masks.size());
  n.weights.reserve(data.rows.size() * masks.size());
  if (masks_out) {
    masks_out->clear();
    masks_out->reserve(data.rows.size() * masks.size());
  }
  for (const auto& row : data.rows) {
    for (const CoalitionMask mask : masks) {
      n.points.push_back(hybrid(z_e, row, mask));
      const auto s = static_cast<std::size_t>(std::popcount(mask));
      n.weights.push_back(shapley_kernel_weight(d, s));
      if (masks_out) masks_out->push_back(mask);
    }
  }
  finalize_neighbourhood(model, n);
  return n;
}

Background kmeans_background(const Dataset& data, std::size_t k,
                             std::size_t iterations, std::uint64_t seed,
                             std::vector<double>* wcss_trace) {
  const std::size_t n = data.rows.size();
  if (k == 0 || k > n) {
    throw std::invalid_argument("kmeans: k must be in [1, n]");
  }
  const std::size_t d = data.dim();

  // k distinct seeded row indices.
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  Rng rng(seed);
  for (std::size_t i = 0; i < k; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, n - 1);
    std::swap(idx[i], idx[pick(rng)]);
  }
  std::vector<Instance> centroids;
  centroids.reserve(k);
  for (std::size_t i = 0; i < k; ++i) centroids.push_back(data.rows[idx[i]]);

  std::vector<std::size_t> assign(n, 0);
  if (wcss_trace) wcss_trace->clear();
  for (std::size_t it = 0; it < iterations; ++it) {
    double wcss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double best = std::numeric_limits<double>::infinity();
      std::size_t best_c = 0;
      for (std::size_t c = 0; c < k; ++c) {
        const double dist = squared_distance(data.rows[i], centroids[c]);
        if (dist < best) {
          best = dist;
          best_c = c;
        }
      }
      assign[i] = best_c;
      wcss += best;
    }
    if (wcss_trace) wcss_trace->push_back(wcss);

    std::vector<Instance> sums(k, Instance(d, 0.0));
    std::vector<std::size_t> counts(k, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < d; ++j) sums[assign[i]][j] += data.rows[i][j];
      ++counts[assign[i]];
    }
    for (std::size_t c = 0; c < k; ++c) {
      if (counts[c] == 0) continue;  // keep an empty cluster's centroid
      for (std::size_t j = 0; j < d; ++j) {
        centroids[c][j] = sums[c][j] / static_cast<double>(counts[c]);
      }
    }
  }
  return Background{std::move(centroids)};
}

}  // namespace lsx
