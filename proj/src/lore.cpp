#include "lsx/lore.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "lsx/util.hpp"

namespace lsx {

double lore_distance(const Instance& x, const Instance& z,
                     const std::vector<FeatureMeta>& meta) {
  const std::size_t d = x.size();
  if (z.size() != d || meta.size() != d) {
    throw std::invalid_argument("lore_distance: dimension mismatch");
  }
  std::size_t m_cat = 0, m_cont = 0;
  double mismatches = 0.0;
  double cont_sq = 0.0;
  for (std::size_t j = 0; j < d; ++j) {
    if (meta[j].kind == FeatureKind::categorical) {
      ++m_cat;
      mismatches += x[j] != z[j] ? 1.0 : 0.0;
    } else {
      ++m_cont;
      const double range = meta[j].max - meta[j].min;
      if (range <= 0.0) {
        throw std::invalid_argument("lore_distance: zero training range on feature " +
                                    std::to_string(j));
      }
      const double diff = (x[j] - z[j]) / range;
      cont_sq += diff * diff;
    }
  }
  double dist = 0.0;
  const double dd = static_cast<double>(d);
  if (m_cat > 0) {
    dist += (static_cast<double>(m_cat) / dd) *
            (mismatches / static_cast<double>(m_cat));
  }
  if (m_cont > 0) {
    dist += (static_cast<double>(m_cont) / dd) *
            (std::sqrt(cont_sq) / std::sqrt(static_cast<double>(m_cont)));
  }
  return std::clamp(dist, 0.0, 1.0);
}

double lore_fitness(const Instance& z, const Instance& z_e, LoreTarget target,
                    const BlackBoxModel& model, double distance) {
  const bool same = model.predict_label(z) == model.predict_label(z_e);
  const bool hit = target == LoreTarget::same_class ? same : !same;
  const double identical = z == z_e ? 1.0 : 0.0;
  return (hit ? 1.0 : 0.0) + (1.0 - distance) - identical;
}

namespace {

struct GaRun {
  std::vector<Instance> population;
  std::vector<double> fitness;
  std::vector<double> best_trace;
};

GaRun run_ga(const BlackBoxModel& model, const Dataset& data,
             const Instance& z_e, LoreTarget target, const LoreConfig& cfg,
             Rng& rng) {
  const std::size_t d = z_e.size();
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<std::size_t> row_pick(0, data.rows.size() - 1);
  std::normal_distribution<double> gauss(0.0, 1.0);

  auto evaluate = [&](const Instance& z) {
    return lore_fitness(z, z_e, target, model, lore_distance(z_e, z, data.meta));
  };
  auto mutate = [&](Instance& z) {
    for (std::size_t j = 0; j < d; ++j) {
      if (unit(rng) >= cfg.mutation_prob) continue;
      const double sample = data.rows[row_pick(rng)][j];
      if (data.meta[j].kind == FeatureKind::categorical) {
        z[j] = sample;
      } else {
        z[j] = sample + 0.05 * data.meta[j].std * gauss(rng);
      }
    }
  };

  GaRun run;
  run.population.assign(cfg.population, z_e);
  run.fitness.resize(cfg.population);
  for (std::size_t i = 0; i < cfg.population; ++i) {
    run.fitness[i] = evaluate(run.population[i]);
  }

  auto ranked = [&run]() {
    std::vector<std::size_t> order(run.population.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&run](std::size_t a, std::size_t b) {
      return run.fitness[a] > run.fitness[b];
    });
    return order;
  };
  auto tournament = [&]() -> const Instance& {
    std::uniform_int_distribution<std::size_t> pick(0, run.population.size() - 1);
    std::size_t best = pick(rng);
    for (std::size_t t = 1; t < cfg.tournament; ++t) {
      const std::size_t cand = pick(rng);
      if (run.fitness[cand] > run.fitness[best]) best = cand;
    }
    return run.population[best];
  };

  run.best_trace.push_back(run.fitness[ranked().front()]);
  for (std::size_t gen = 0; gen < cfg.generations; ++gen) {
    std::vector<Instance> next;
    next.reserve(cfg.population);
    const auto order = ranked();
    const std::size_t elites = std::min(cfg.elitism, cfg.population);
    for (std::size_t e = 0; e < elites; ++e) next.push_back(run.population[order[e]]);
    while (next.size() < cfg.population) {
      const Instance& p1 = tournament();
      const Instance& p2 = tournament();
      Instance child = p1;
      if (unit(rng) < cfg.crossover_prob) {
        for (std::size_t j = 0; j < d; ++j) {
          if (unit(rng) < 0.5) child[j] = p2[j];
        }
      }
      mutate(child);
      next.push_back(std::move(child));
    }
    run.population = std::move(next);
    for (std::size_t i = 0; i < cfg.population; ++i) {
      run.fitness[i] = evaluate(run.population[i]);
    }
    run.best_trace.push_back(run.fitness[ranked().front()]);
  }
  return run;
}

}  // namespace

Neighbourhood lore_neighbourhood(const BlackBoxModel& model,
                                 const Dataset& data, const Instance& z_e,
                                 const LoreConfig& cfg, std::uint64_t seed,
                                 LoreTrace* trace) {
  if (cfg.size == 0 || cfg.size % 2 != 0) {
    throw std::invalid_argument("lore: neighbourhood size must be even and > 0");
  }
  if (cfg.population < 2) throw std::invalid_argument("lore: population must be >= 2");
  if (cfg.tournament == 0 || cfg.elitism > cfg.population) {
    throw std::invalid_argument("lore: bad tournament/elitism");
  }
  if (cfg.crossover_prob < 0.0 || cfg.crossover_prob > 1.0 ||
      cfg.mutation_prob < 0.0 || cfg.mutation_prob > 1.0) {
    throw std::invalid_argument("lore: probabilities must be in [0,1]");
  }
  if (data.rows.empty()) throw std::invalid_argument("lore: empty training data");

  Rng rng_same(seed);
  Rng rng_diff(seed + 1);
  GaRun same = run_ga(model, data, z_e, LoreTarget::same_class, cfg, rng_same);
  GaRun diff = run_ga(model, data, z_e, LoreTarget::different_class, cfg, rng_diff);

  const int own_label = model.predict_label(z_e);
  bool opposite_found = false;
  for (const auto& z : diff.population) {
    if (model.predict_label(z) != own_label) {
      opposite_found = true;
      break;
    }
  }

  auto take_best = [&](GaRun& run, std::size_t count) {
    std::vector<std::size_t> order(run.population.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&run](std::size_t a, std::size_t b) {
      return run.fitness[a] > run.fitness[b];
    });
    std::vector<Instance> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count && i < order.size(); ++i) {
      out.push_back(run.population[order[i]]);
    }
    return out;
  };

  Neighbourhood n;
  n.strategy = Strategy::lore;
  n.seed = seed;
  const std::size_t half = cfg.size / 2;
  if (cfg.population < half) {
    throw std::invalid_argument("lore: population smaller than size/2");
  }
  for (auto& z : take_best(same, half)) n.points.push_back(std::move(z));
  for (auto& z : take_best(diff, half)) n.points.push_back(std::move(z));
  if (!opposite_found) {
    n.warning = "lore: no opposite-class instance found after " +
                std::to_string(cfg.generations) + " generations";
  }
  finalize_neighbourhood(model, n);
  if (trace) {
    trace->best_same = std::move(same.best_trace);
    trace->best_diff = std::move(diff.best_trace);
    trace->opposite_class_found = opposite_found;
  }
  return n;
}

}  // namespace lsx
