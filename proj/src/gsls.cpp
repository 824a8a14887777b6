#include "lsx/gsls.hpp"

#include <cmath>
#include <limits>

#include "lsx/util.hpp"

namespace lsx {

Instance growing_spheres_counterfactual(const BlackBoxModel& model,
                                        const Instance& z_e, double eta,
                                        double max_radius,
                                        std::size_t layer_samples,
                                        std::uint64_t seed) {
  if (eta <= 0.0) throw std::invalid_argument("growing spheres: eta must be > 0");
  if (max_radius < eta) {
    throw std::invalid_argument("growing spheres: max_radius must be >= eta");
  }
  if (layer_samples == 0) {
    throw std::invalid_argument("growing spheres: layer_samples must be >= 1");
  }
  const int own_label = model.predict_label(z_e);
  Rng rng(seed);

  auto enemies_in_shell = [&](double lo, double hi, Instance* closest) {
    bool found = false;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < layer_samples; ++i) {
      Instance p = random_in_shell(rng, z_e, lo, hi);
      if (model.predict_label(p) != own_label) {
        const double dist = euclidean_distance(p, z_e);
        if (dist < best) {
          best = dist;
          if (closest) *closest = p;
        }
        found = true;
      }
    }
    return found;
  };

  // Shrink the initial ball until it is enemy-free.
  double a = eta;
  Instance closest;
  while (enemies_in_shell(0.0, a, &closest)) {
    a *= 0.5;
    if (a < 1e-12) return closest;  // enemy arbitrarily close; done
  }
  // Expand outwards one layer at a time.
  while (a < max_radius) {
    const double hi = std::min(a + eta, max_radius);
    if (enemies_in_shell(a, hi, &closest)) return closest;
    a = hi;
  }
  throw std::runtime_error("growing spheres: no counterfactual within max radius");
}

Neighbourhood gsls_neighbourhood(const BlackBoxModel& model,
                                 const Instance& z_e, const GslsConfig& cfg,
                                 std::uint64_t seed,
                                 Instance* counterfactual_out) {
  if (cfg.sample_count == 0) throw std::invalid_argument("gsls: sample count 0");
  const double max_radius = cfg.max_radius > 0.0 ? cfg.max_radius : 1e3 * cfg.eta;
  const Instance cf = growing_spheres_counterfactual(
      model, z_e, cfg.eta, max_radius, cfg.layer_samples, seed);
  if (counterfactual_out) *counterfactual_out = cf;

  const double radius =
      cfg.radius > 0.0 ? cfg.radius
                       : std::max(cfg.eta, 0.5 * euclidean_distance(cf, z_e));

  Rng rng(seed + 1);
  Neighbourhood n;
  n.strategy = Strategy::gsls;
  n.seed = seed;
  n.points.reserve(cfg.sample_count);
  for (std::size_t i = 0; i < cfg.sample_count; ++i) {
    n.points.push_back(random_in_ball(rng, cf, radius));
  }
  finalize_neighbourhood(model, n);
  return n;
}

}  // namespace lsx
