#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lsx/types.hpp"

namespace lsx {

/// Itemset of (feature index, bin id) pairs, at most one item per feature,
/// kept sorted by feature index.
struct Pattern {
  std::vector<std::pair<std::size_t, int>> items;
  double support = 0.0;
};

struct Binning {
  // Per-feature strictly increasing edges; empty for categorical features.
  std::vector<std::vector<double>> edges;
  std::vector<FeatureKind> kinds;
  bool constant_feature_warning = false;

  int bin_of(std::size_t feature, double value) const;
  std::vector<int> bin_row(const Instance& x) const;
};

struct PatternSet {
  std::vector<Pattern> patterns;
  Binning binning;
  double min_support = 0.05;
  std::size_t max_length = 4;

  std::string to_text() const;  // inspection / fixture format
};

/// Equal-frequency quantile edges per continuous feature; categorical
/// features pass through as their integer codes.
Binning discretize(const Dataset& data, std::size_t bins);
std::vector<std::vector<int>> bin_dataset(const Dataset& data, const Binning& b);

/// Levelwise Apriori over the binned dataset: all and only itemsets of at
/// most max_length items (one per feature) with support >= min_support.
PatternSet apriori(const std::vector<std::vector<int>>& binned,
                   const Binning& binning, double min_support,
                   std::size_t max_length);

/// supp(p) when the binned x matches every item of p, else 0.
double pattern_feature(const Instance& x, const Pattern& p, const Binning& b);

/// L1 distance between pattern-feature vectors: sum_i |phi_i(x) - phi_i(z)|.
double palex_distance(const Instance& x, const Instance& z,
                      const PatternSet& ps);

enum class PalexWeightMap { exp_neg, inverse };

struct PalexConfig {
  std::size_t sample_count = 5000;
  double min_support = 0.05;
  std::size_t max_length = 4;
  std::size_t bins = 4;
  PalexWeightMap weight_map = PalexWeightMap::exp_neg;
};

/// Subset-replacement sampling: each feature kept from z_e with prob 1/2
/// (the empty subset included), the rest filled from a random training row;
/// weights from the pattern distance to z_e.
Neighbourhood palex_neighbourhood(const BlackBoxModel& model,
                                  const Dataset& data, const Instance& z_e,
                                  const PalexConfig& cfg, std::uint64_t seed,
                                  const PatternSet* mined = nullptr);

}  // namespace lsx
