#include "lsx/lime.hpp"

#include <cmath>

#include "lsx/util.hpp"

namespace lsx {

double lime_auto_gamma(std::size_t d) {
  return std::pow(std::sqrt(static_cast<double>(d)), 0.75);
}

std::vector<double> lime_weights(const std::vector<Instance>& points,
                                 const Instance& z_e, double gamma) {
  if (gamma <= 0.0) throw std::invalid_argument("lime: gamma must be > 0");
  std::vector<double> weights(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double sq = squared_distance(points[i], z_e);
    if (!std::isfinite(sq)) throw std::invalid_argument("lime: non-finite distance");
    weights[i] = std::exp(-sq / gamma);
  }
  return weights;
}

Neighbourhood lime_neighbourhood(const BlackBoxModel& model,
                                 const Dataset& data, const Instance& z_e,
                                 const LimeConfig& cfg, std::uint64_t seed) {
  const std::size_t d = z_e.size();
  if (cfg.sample_count == 0) throw std::invalid_argument("lime: sample count 0");

  std::vector<double> sigma = cfg.sigma;
  if (sigma.empty()) {
    if (data.meta.size() != d) {
      throw std::invalid_argument("lime: sigma auto needs training data of matching d");
    }
    sigma.resize(d);
    for (std::size_t j = 0; j < d; ++j) {
      sigma[j] = data.meta[j].std;
      if (sigma[j] <= 0.0) {
        throw std::invalid_argument("lime: constant feature " + std::to_string(j) +
                                    " gives zero std in sigma auto mode");
      }
    }
  }
  if (sigma.size() != d) throw std::invalid_argument("lime: sigma length mismatch");
  for (double s : sigma) {
    if (s <= 0.0) throw std::invalid_argument("lime: sigma entries must be > 0");
  }
  const double gamma = cfg.gamma > 0.0 ? cfg.gamma : lime_auto_gamma(d);

  Rng rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Neighbourhood n;
  n.strategy = Strategy::lime;
  n.seed = seed;
  n.points.reserve(cfg.sample_count);
  for (std::size_t i = 0; i < cfg.sample_count; ++i) {
    Instance p(d);
    for (std::size_t j = 0; j < d; ++j) p[j] = z_e[j] + sigma[j] * gauss(rng);
    n.points.push_back(std::move(p));
  }
  n.weights = lime_weights(n.points, z_e, gamma);
  finalize_neighbourhood(model, n);
  return n;
}

}  // namespace lsx
