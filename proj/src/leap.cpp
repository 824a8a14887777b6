#include "lsx/leap.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>

#include "lsx/lime.hpp"
#include "lsx/util.hpp"

namespace lsx {

namespace {

std::vector<std::size_t> nearest_indices(const Dataset& data, const Instance& z_e,
                                         std::size_t k) {
  std::vector<std::size_t> order(data.rows.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return squared_distance(data.rows[a], z_e) < squared_distance(data.rows[b], z_e);
  });
  order.resize(std::min(k, order.size()));
  return order;
}

}  // namespace

double lid_estimate(const Dataset& data, const Instance& z_e, std::size_t k) {
  if (k < 2) throw std::invalid_argument("lid: k must be >= 2");
  std::vector<double> dists;
  dists.reserve(data.rows.size());
  for (const auto& row : data.rows) {
    const double dist = euclidean_distance(row, z_e);
    if (dist > 0.0) dists.push_back(dist);
  }
  if (dists.size() < k) {
    throw std::invalid_argument("lid: fewer than k usable neighbours");
  }
  std::nth_element(dists.begin(), dists.begin() + static_cast<long>(k - 1),
                   dists.end());
  dists.resize(k);
  const double r_k = *std::max_element(dists.begin(), dists.end());
  double sum = 0.0;
  for (double r : dists) sum += std::log(r / r_k);
  if (sum == 0.0) {
    throw std::invalid_argument("lid: all neighbour distances equal");
  }
  return -static_cast<double>(k) / sum;
}

LocalPca local_pca(const Dataset& data, const Instance& z_e, std::size_t k_pca,
                   std::size_t out_dim) {
  const std::size_t d = z_e.size();
  if (out_dim == 0) throw std::invalid_argument("local_pca: out_dim must be >= 1");
  if (out_dim > std::min(k_pca, d)) {
    throw std::invalid_argument("local_pca: out_dim exceeds min(k_pca, d)");
  }
  const auto idx = nearest_indices(data, z_e, k_pca);
  if (idx.size() < 2) throw std::invalid_argument("local_pca: need >= 2 neighbours");

  Eigen::MatrixXd x(static_cast<long>(idx.size()), static_cast<long>(d));
  for (std::size_t i = 0; i < idx.size(); ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      x(static_cast<long>(i), static_cast<long>(j)) = data.rows[idx[i]][j];
    }
  }
  const Eigen::RowVectorXd mean = x.colwise().mean();
  x.rowwise() -= mean;
  const Eigen::MatrixXd cov =
      (x.transpose() * x) / static_cast<double>(idx.size());

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(cov);
  if (eig.info() != Eigen::Success) {
    throw std::runtime_error("local_pca: eigendecomposition failed");
  }

  LocalPca pca;
  pca.mean.assign(mean.data(), mean.data() + mean.size());
  const double max_eval = std::max(0.0, eig.eigenvalues().maxCoeff());
  const double rank_tol = std::max(1e-18, max_eval * 1e-12);
  // Eigenvalues come in ascending order; take the top ones above rank noise.
  for (long c = static_cast<long>(d) - 1;
       c >= 0 && pca.components.size() < out_dim; --c) {
    const double eval = eig.eigenvalues()[c];
    if (eval <= rank_tol) break;
    Instance comp(d);
    for (std::size_t j = 0; j < d; ++j) {
      comp[j] = eig.eigenvectors()(static_cast<long>(j), c);
    }
    pca.components.push_back(std::move(comp));
    pca.variances.push_back(eval);
  }
  if (pca.components.empty()) {
    throw std::runtime_error("local_pca: neighbourhood has rank 0");
  }
  pca.rank_reduced = pca.components.size() < out_dim;
  return pca;
}

std::vector<double> LocalPca::project(const Instance& x) const {
  std::vector<double> p(components.size(), 0.0);
  for (std::size_t c = 0; c < components.size(); ++c) {
    for (std::size_t j = 0; j < mean.size(); ++j) {
      p[c] += components[c][j] * (x[j] - mean[j]);
    }
  }
  return p;
}

Instance LocalPca::reconstruct(const std::vector<double>& p) const {
  Instance x = mean;
  for (std::size_t c = 0; c < components.size(); ++c) {
    for (std::size_t j = 0; j < x.size(); ++j) x[j] += p[c] * components[c][j];
  }
  return x;
}

Neighbourhood leap_neighbourhood(const BlackBoxModel& model,
                                 const Dataset& data, const Instance& z_e,
                                 const LeapConfig& cfg, std::uint64_t seed) {
  const std::size_t d = z_e.size();
  if (cfg.sample_count == 0) throw std::invalid_argument("leap: sample count 0");

  const double lid = lid_estimate(data, z_e, cfg.k_lid);
  const std::size_t out_dim = static_cast<std::size_t>(
      std::clamp(std::llround(lid), 1ll, static_cast<long long>(d)));

  const std::size_t k_pca = std::min(cfg.k_pca, data.rows.size());
  LocalPca pca = local_pca(data, z_e, k_pca, std::min(out_dim, std::min(k_pca, d)));
  const std::size_t sub_d = pca.out_dim();

  // Per-component std of the projected neighbours drives the Gaussian.
  std::vector<double> sigma = cfg.subspace_sigma;
  if (sigma.empty()) {
    const auto idx = nearest_indices(data, z_e, k_pca);
    std::vector<std::vector<double>> projected;
    projected.reserve(idx.size());
    for (std::size_t i : idx) projected.push_back(pca.project(data.rows[i]));
    sigma.assign(sub_d, 0.0);
    for (const auto& p : projected) {
      for (std::size_t c = 0; c < sub_d; ++c) sigma[c] += p[c] * p[c];
    }
    for (std::size_t c = 0; c < sub_d; ++c) {
      // Projections are mean-centered by construction.
      sigma[c] = std::sqrt(sigma[c] / static_cast<double>(projected.size()));
      if (sigma[c] <= 0.0) sigma[c] = 1e-9;
    }
  }
  if (sigma.size() != sub_d) {
    throw std::invalid_argument("leap: subspace sigma length mismatch");
  }
  const double gamma = cfg.gamma > 0.0 ? cfg.gamma : lime_auto_gamma(sub_d);

  const std::vector<double> z_hat = pca.project(z_e);
  Rng rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  Neighbourhood n;
  n.strategy = Strategy::leap;
  n.seed = seed;
  n.points.reserve(cfg.sample_count);
  n.weights.reserve(cfg.sample_count);
  for (std::size_t i = 0; i < cfg.sample_count; ++i) {
    std::vector<double> p(sub_d);
    double sq = 0.0;
    for (std::size_t c = 0; c < sub_d; ++c) {
      p[c] = z_hat[c] + sigma[c] * gauss(rng);
      const double diff = p[c] - z_hat[c];
      sq += diff * diff;
    }
    n.points.push_back(pca.reconstruct(p));
    n.weights.push_back(std::exp(-sq / gamma));
  }
  if (sub_d < out_dim) {
    n.warning = "leap: subspace dimension reduced from " +
                std::to_string(out_dim) + " to " + std::to_string(sub_d);
  }
  finalize_neighbourhood(model, n);
  return n;
}

}  // namespace lsx
