#include "lsx/explain.hpp"

#include <bit>
#include <cmath>
#include <fstream>

#include "lsx/surrogates.hpp"
#include "lsx/util.hpp"
#include "nlohmann/json.hpp"

namespace lsx {

Strategy strategy_of(const StrategyConfig& cfg) {
  return std::visit(
      [](const auto& c) -> Strategy {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, LimeConfig>) return Strategy::lime;
        if constexpr (std::is_same_v<T, GslsConfig>) return Strategy::gsls;
        if constexpr (std::is_same_v<T, LoreConfig>) return Strategy::lore;
        if constexpr (std::is_same_v<T, LeapConfig>) return Strategy::leap;
        if constexpr (std::is_same_v<T, KernelShapConfig>) return Strategy::kernelshap;
        if constexpr (std::is_same_v<T, PalexConfig>) return Strategy::palex;
      },
      cfg);
}

namespace {

nlohmann::json auto_or(double v) {
  return v > 0.0 ? nlohmann::json(v) : nlohmann::json("auto");
}

nlohmann::json strategy_to_json(const StrategyConfig& cfg) {
  nlohmann::json j;
  std::visit(
      [&j](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, LimeConfig>) {
          j["sample_count"] = c.sample_count;
          j["sigma"] = c.sigma.empty() ? nlohmann::json("auto")
                                       : nlohmann::json(c.sigma);
          j["gamma"] = auto_or(c.gamma);
        } else if constexpr (std::is_same_v<T, GslsConfig>) {
          j["radius"] = auto_or(c.radius);
          j["sample_count"] = c.sample_count;
          j["eta"] = c.eta;
          j["max_radius"] = auto_or(c.max_radius);
          j["layer_samples"] = c.layer_samples;
        } else if constexpr (std::is_same_v<T, LoreConfig>) {
          j["size"] = c.size;
          j["population"] = c.population;
          j["generations"] = c.generations;
          j["crossover_prob"] = c.crossover_prob;
          j["mutation_prob"] = c.mutation_prob;
          j["tournament"] = c.tournament;
          j["elitism"] = c.elitism;
        } else if constexpr (std::is_same_v<T, LeapConfig>) {
          j["k_lid"] = c.k_lid;
          j["k_pca"] = c.k_pca;
          j["sample_count"] = c.sample_count;
          j["subspace_sigma"] = c.subspace_sigma.empty()
                                    ? nlohmann::json("auto")
                                    : nlohmann::json(c.subspace_sigma);
          j["gamma"] = auto_or(c.gamma);
        } else if constexpr (std::is_same_v<T, KernelShapConfig>) {
          j["background_k"] = c.background_k;
          j["enumeration_cap"] = c.enumeration_cap;
        } else if constexpr (std::is_same_v<T, PalexConfig>) {
          j["sample_count"] = c.sample_count;
          j["min_support"] = c.min_support;
          j["max_length"] = c.max_length;
          j["bins"] = c.bins;
          j["weight_map"] =
              c.weight_map == PalexWeightMap::exp_neg ? "exp" : "inverse";
        }
      },
      cfg);
  return j;
}

nlohmann::json surrogate_to_json(const SurrogateConfig& cfg) {
  nlohmann::json j;
  j["kind"] = cfg.kind == SurrogateConfig::Kind::ridge ? "ridge" : "tree";
  j["ridge_lambda"] = cfg.ridge_lambda;
  j["tree_max_depth"] = cfg.tree_max_depth;
  j["tree_min_leaf_weight"] = cfg.tree_min_leaf_weight;
  return j;
}

/// Auto GSLS geometry is derived from the data: step from the mean feature
/// range, cap from the data diameter.
GslsConfig resolve_gsls(const GslsConfig& cfg, const Dataset& data) {
  GslsConfig out = cfg;
  if (out.eta <= 0.0 || out.max_radius <= 0.0) {
    double mean_range = 0.0;
    double diameter_sq = 0.0;
    for (const auto& m : data.meta) {
      mean_range += m.max - m.min;
      const double r = m.max - m.min;
      diameter_sq += r * r;
    }
    mean_range /= data.meta.empty() ? 1.0 : static_cast<double>(data.meta.size());
    if (out.eta <= 0.0) out.eta = std::max(1e-9, 0.1 * mean_range);
    if (out.max_radius <= 0.0) {
      out.max_radius = std::max(out.eta, 10.0 * std::sqrt(diameter_sq));
    }
  }
  return out;
}

Background resolve_background(const KernelShapConfig& cfg, const Dataset& data,
                              std::uint64_t seed) {
  if (cfg.background_k == 0 || cfg.background_k >= data.rows.size()) {
    return Background{data.rows};
  }
  return kmeans_background(data, cfg.background_k, 25, seed);
}

struct KernelShapFit {
  ShapleyResult solution;
  Neighbourhood neighbourhood;
  double fidelity_value = 0.0;
};

KernelShapFit fit_kernelshap(const BlackBoxModel& model, const Dataset& data,
                             const Instance& z_e, const KernelShapConfig& cfg,
                             std::uint64_t seed) {
  if (z_e.size() > cfg.enumeration_cap) {
    throw std::invalid_argument(
        "kernelshap: d exceeds the configured enumeration cap");
  }
  KernelShapFit fit;
  const Background background = resolve_background(cfg, data, seed);
  Dataset bg_data;
  bg_data.rows = background.rows;
  std::vector<CoalitionMask> masks;
  fit.neighbourhood = kernelshap_neighbourhood(model, bg_data, z_e, &masks);
  fit.neighbourhood.seed = seed;
  fit.solution = kernelshap_solve(model, z_e, background,
                                  SubsetSource::full_enumeration, 0, seed);

  // The mask-space regression is the surrogate; its prediction for a hybrid
  // point is base + sum of phi over the clamped features.
  std::vector<int> surrogate_labels(masks.size());
  for (std::size_t i = 0; i < masks.size(); ++i) {
    double y = fit.solution.base_value;
    for (std::size_t j = 0; j < z_e.size(); ++j) {
      if ((masks[i] >> j) & 1u) y += fit.solution.phi[j];
    }
    surrogate_labels[i] = y >= 0.5 ? 1 : 0;
  }
  fit.fidelity_value = fidelity(surrogate_labels, fit.neighbourhood.bb_labels,
                                fit.neighbourhood.weights);
  return fit;
}

}  // namespace

std::string config_json(const StrategyConfig& strategy,
                        const SurrogateConfig& surrogate) {
  nlohmann::json j;
  j["strategy"] = strategy_name(strategy_of(strategy));
  j[strategy_name(strategy_of(strategy))] = strategy_to_json(strategy);
  j["surrogate"] = surrogate_to_json(surrogate);
  return j.dump();
}

ExplainResult explain_full(const BlackBoxModel& model, const Dataset& data,
                           const Instance& z_e, const StrategyConfig& strategy,
                           const SurrogateConfig& surrogate, std::uint64_t seed) {
  if (z_e.empty()) throw std::invalid_argument("explain: d must be >= 1");
  if (data.dim() != z_e.size()) {
    throw std::invalid_argument("explain: instance dimension mismatch");
  }
  check_finite(z_e, "explain: instance");

  const Strategy id = strategy_of(strategy);
  const std::uint64_t sub_seed = strategy_seed(seed, id);

  ExplainResult result;
  Explanation& e = result.explanation;
  e.method = strategy_name(id);
  e.seed = seed;
  e.config_digest = fnv1a_digest(config_json(strategy, surrogate));

  if (id == Strategy::kernelshap) {
    KernelShapFit fit = fit_kernelshap(model, data, z_e,
                                       std::get<KernelShapConfig>(strategy),
                                       sub_seed);
    e.attribution = fit.solution.phi;
    e.base_value = fit.solution.base_value;
    e.fidelity = fit.fidelity_value;
    result.neighbourhood = std::move(fit.neighbourhood);
    return result;
  }

  Neighbourhood n = std::visit(
      [&](const auto& cfg) -> Neighbourhood {
        using T = std::decay_t<decltype(cfg)>;
        if constexpr (std::is_same_v<T, LimeConfig>) {
          return lime_neighbourhood(model, data, z_e, cfg, sub_seed);
        } else if constexpr (std::is_same_v<T, GslsConfig>) {
          return gsls_neighbourhood(model, z_e, resolve_gsls(cfg, data), sub_seed);
        } else if constexpr (std::is_same_v<T, LoreConfig>) {
          return lore_neighbourhood(model, data, z_e, cfg, sub_seed);
        } else if constexpr (std::is_same_v<T, LeapConfig>) {
          return leap_neighbourhood(model, data, z_e, cfg, sub_seed);
        } else if constexpr (std::is_same_v<T, PalexConfig>) {
          return palex_neighbourhood(model, data, z_e, cfg, sub_seed);
        } else {
          throw std::logic_error("unreachable strategy");
        }
      },
      strategy);

  if (surrogate.kind == SurrogateConfig::Kind::ridge) {
    const LinearSurrogate fit = fit_weighted_ridge(n.points, n.bb_probas,
                                                   n.weights, surrogate.ridge_lambda);
    std::vector<int> labels(n.points.size());
    for (std::size_t i = 0; i < n.points.size(); ++i) {
      labels[i] = fit.predict_label(n.points[i]);
    }
    e.attribution = attribution_of(fit);
    e.base_value = fit.intercept;
    e.fidelity = fidelity(labels, n.bb_labels, n.weights);
  } else {
    const TreeSurrogate fit =
        fit_tree(n.points, n.bb_labels, n.weights, surrogate.tree_max_depth,
                 surrogate.tree_min_leaf_weight);
    std::vector<int> labels(n.points.size());
    for (std::size_t i = 0; i < n.points.size(); ++i) {
      labels[i] = fit.predict_label(n.points[i]);
    }
    e.tree_rules = fit.to_text(data.feature_names);
    e.fidelity = fidelity(labels, n.bb_labels, n.weights);
  }
  result.neighbourhood = std::move(n);
  return result;
}

Explanation explain(const BlackBoxModel& model, const Dataset& data,
                    const Instance& z_e, const StrategyConfig& strategy,
                    const SurrogateConfig& surrogate, std::uint64_t seed) {
  return explain_full(model, data, z_e, strategy, surrogate, seed).explanation;
}

void save_neighbourhood(const Neighbourhood& n, const std::string& csv_path,
                        const std::string& sidecar_path,
                        const std::string& config_json_text) {
  std::ofstream out(csv_path, std::ios::binary);
  if (!out) throw std::runtime_error("neighbourhood: cannot write " + csv_path);
  const std::size_t d = n.points.empty() ? 0 : n.points.front().size();
  for (std::size_t j = 0; j < d; ++j) out << "f" << j << ",";
  out << "weight,bb_label\n";
  for (std::size_t i = 0; i < n.points.size(); ++i) {
    for (std::size_t j = 0; j < d; ++j) out << format_double(n.points[i][j]) << ",";
    if (n.weighted()) out << format_double(n.weights[i]);
    out << "," << n.bb_labels[i] << "\n";
  }
  if (!out) throw std::runtime_error("neighbourhood: write failed " + csv_path);

  nlohmann::json meta;
  meta["strategy"] = strategy_name(n.strategy);
  meta["seed"] = n.seed;
  meta["config"] = nlohmann::json::parse(config_json_text);
  if (!n.warning.empty()) meta["warning"] = n.warning;
  std::ofstream side(sidecar_path, std::ios::binary);
  if (!side) throw std::runtime_error("neighbourhood: cannot write " + sidecar_path);
  side << meta.dump(2) << "\n";
}

}  // namespace lsx
