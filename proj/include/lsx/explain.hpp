#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "lsx/gsls.hpp"
#include "lsx/leap.hpp"
#include "lsx/lime.hpp"
#include "lsx/lore.hpp"
#include "lsx/patterns.hpp"
#include "lsx/shapley.hpp"
#include "lsx/types.hpp"

namespace lsx {

struct KernelShapConfig {
  std::size_t background_k = 0;  // 0 = use every training row
  std::size_t enumeration_cap = kShapleyEnumerationCap;
};

using StrategyConfig = std::variant<LimeConfig, GslsConfig, LoreConfig,
                                    LeapConfig, KernelShapConfig, PalexConfig>;

Strategy strategy_of(const StrategyConfig& cfg);

struct SurrogateConfig {
  enum class Kind { ridge, tree };
  Kind kind = Kind::ridge;
  double ridge_lambda = 1e-6;
  int tree_max_depth = 3;
  double tree_min_leaf_weight = 1.0;
};

/// Canonical JSON of the pair of configs; its digest goes into provenance.
std::string config_json(const StrategyConfig& strategy,
                        const SurrogateConfig& surrogate);

struct ExplainResult {
  Explanation explanation;
  Neighbourhood neighbourhood;
};

/// The two-step procedure: generate the strategy's neighbourhood, label it
/// with the black box, fit the surrogate on (points, weights, targets).
/// Ridge regresses bb probabilities; the tree fits bb labels. KernelSHAP
/// fits its weighted regression on coalition masks, so its attribution is
/// the kernel Shapley estimate. Pure in (model, data, z_e, configs, seed).
ExplainResult explain_full(const BlackBoxModel& model, const Dataset& data,
                           const Instance& z_e, const StrategyConfig& strategy,
                           const SurrogateConfig& surrogate, std::uint64_t seed);

Explanation explain(const BlackBoxModel& model, const Dataset& data,
                    const Instance& z_e, const StrategyConfig& strategy,
                    const SurrogateConfig& surrogate, std::uint64_t seed);

/// Feature columns, then weight (empty when absent), then bb_label; plus a
/// JSON sidecar holding strategy, seed and config.
void save_neighbourhood(const Neighbourhood& n, const std::string& csv_path,
                        const std::string& sidecar_path,
                        const std::string& config_json_text);

}  // namespace lsx
