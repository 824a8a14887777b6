#include "lsx/patterns.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "lsx/util.hpp"

namespace lsx {

int Binning::bin_of(std::size_t feature, double value) const {
  if (kinds[feature] == FeatureKind::categorical) {
    return static_cast<int>(std::llround(value));
  }
  const auto& e = edges[feature];
  int bin = 0;
  for (double edge : e) {
    if (value > edge) ++bin;
  }
  return bin;
}

std::vector<int> Binning::bin_row(const Instance& x) const {
  std::vector<int> out(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) out[j] = bin_of(j, x[j]);
  return out;
}

Binning discretize(const Dataset& data, std::size_t bins) {
  if (bins < 2) throw std::invalid_argument("discretize: bins must be >= 2");
  if (data.rows.empty()) throw std::invalid_argument("discretize: empty data");
  const std::size_t d = data.dim();
  Binning b;
  b.edges.resize(d);
  b.kinds.resize(d, FeatureKind::continuous);
  const std::size_t n = data.rows.size();
  for (std::size_t j = 0; j < d; ++j) {
    if (j < data.meta.size() && data.meta[j].kind == FeatureKind::categorical) {
      b.kinds[j] = FeatureKind::categorical;
      continue;
    }
    std::vector<double> sorted(n);
    for (std::size_t i = 0; i < n; ++i) sorted[i] = data.rows[i][j];
    std::sort(sorted.begin(), sorted.end());
    if (sorted.front() == sorted.back()) {
      b.constant_feature_warning = true;  // single bin
      continue;
    }
    std::vector<double>& edges = b.edges[j];
    for (std::size_t q = 1; q < bins; ++q) {
      const double edge = sorted[std::min(n - 1, q * n / bins)];
      if (edges.empty() || edge > edges.back()) edges.push_back(edge);
    }
    // A maximal edge would leave the top bin empty for the training data.
    while (!edges.empty() && edges.back() >= sorted.back()) edges.pop_back();
  }
  return b;
}

std::vector<std::vector<int>> bin_dataset(const Dataset& data, const Binning& b) {
  std::vector<std::vector<int>> out;
  out.reserve(data.rows.size());
  for (const auto& row : data.rows) out.push_back(b.bin_row(row));
  return out;
}

namespace {

using Items = std::vector<std::pair<std::size_t, int>>;

bool matches(const std::vector<int>& binned_row, const Items& items) {
  for (const auto& [feature, bin] : items) {
    if (binned_row[feature] != bin) return false;
  }
  return true;
}

double support_of(const std::vector<std::vector<int>>& binned, const Items& items) {
  std::size_t count = 0;
  for (const auto& row : binned) count += matches(row, items);
  return static_cast<double>(count) / static_cast<double>(binned.size());
}

}  // namespace

PatternSet apriori(const std::vector<std::vector<int>>& binned,
                   const Binning& binning, double min_support,
                   std::size_t max_length) {
  if (min_support <= 0.0 || min_support > 1.0) {
    throw std::invalid_argument("apriori: min_support must be in (0, 1]");
  }
  if (max_length < 1) throw std::invalid_argument("apriori: max_length must be >= 1");
  if (binned.empty()) throw std::invalid_argument("apriori: empty dataset");

  PatternSet ps;
  ps.binning = binning;
  ps.min_support = min_support;
  ps.max_length = max_length;

  // Frequent single items.
  std::map<std::pair<std::size_t, int>, std::size_t> counts;
  for (const auto& row : binned) {
    for (std::size_t j = 0; j < row.size(); ++j) ++counts[{j, row[j]}];
  }
  std::vector<Items> level;
  for (const auto& [item, count] : counts) {
    const double support =
        static_cast<double>(count) / static_cast<double>(binned.size());
    if (support >= min_support) {
      level.push_back({item});
      ps.patterns.push_back({{item}, support});
    }
  }

  std::set<Items> frequent(level.begin(), level.end());
  for (std::size_t length = 2; length <= max_length && level.size() > 1; ++length) {
    std::vector<Items> next;
    for (std::size_t a = 0; a < level.size(); ++a) {
      for (std::size_t b = a + 1; b < level.size(); ++b) {
        // Sorted level: join pairs sharing the first length-2 items whose
        // last items sit on distinct features.
        if (!std::equal(level[a].begin(), level[a].end() - 1, level[b].begin(),
                        level[b].end() - 1)) {
          continue;
        }
        if (level[b].back().first <= level[a].back().first) continue;
        Items candidate = level[a];
        candidate.push_back(level[b].back());
        bool all_subsets_frequent = true;
        for (std::size_t drop = 0; drop + 2 < candidate.size() && all_subsets_frequent;
             ++drop) {
          Items sub = candidate;
          sub.erase(sub.begin() + static_cast<long>(drop));
          all_subsets_frequent = frequent.count(sub) > 0;
        }
        if (!all_subsets_frequent) continue;
        const double support = support_of(binned, candidate);
        if (support >= min_support) {
          next.push_back(candidate);
          ps.patterns.push_back({candidate, support});
        }
      }
    }
    std::sort(next.begin(), next.end());
    frequent.insert(next.begin(), next.end());
    level = std::move(next);
  }
  return ps;
}

double pattern_feature(const Instance& x, const Pattern& p, const Binning& b) {
  return matches(b.bin_row(x), p.items) ? p.support : 0.0;
}

double palex_distance(const Instance& x, const Instance& z,
                      const PatternSet& ps) {
  const std::vector<int> bx = ps.binning.bin_row(x);
  const std::vector<int> bz = ps.binning.bin_row(z);
  double dist = 0.0;
  for (const auto& p : ps.patterns) {
    const double fx = matches(bx, p.items) ? p.support : 0.0;
    const double fz = matches(bz, p.items) ? p.support : 0.0;
    dist += std::abs(fx - fz);
  }
  return dist;
}

std::string PatternSet::to_text() const {
  std::ostringstream out;
  out << "patterns " << patterns.size() << " min_support "
      << format_double(min_support) << " max_length " << max_length << "\n";
  for (const auto& p : patterns) {
    out << format_double(p.support);
    for (const auto& [feature, bin] : p.items) out << " " << feature << ":" << bin;
    out << "\n";
  }
  return out.str();
}

Neighbourhood palex_neighbourhood(const BlackBoxModel& model,
                                  const Dataset& data, const Instance& z_e,
                                  const PalexConfig& cfg, std::uint64_t seed,
                                  const PatternSet* mined) {
  if (data.rows.empty()) throw std::invalid_argument("palex: empty data");
  if (cfg.sample_count == 0) throw std::invalid_argument("palex: sample count 0");
  const std::size_t d = z_e.size();

  PatternSet local;
  if (!mined) {
    const Binning binning = discretize(data, cfg.bins);
    local = apriori(bin_dataset(data, binning), binning, cfg.min_support,
                    cfg.max_length);
    mined = &local;
  }
  Rng rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<std::size_t> row_pick(0, data.rows.size() - 1);

  Neighbourhood n;
  n.strategy = Strategy::palex;
  n.seed = seed;
  n.points.reserve(cfg.sample_count);
  n.weights.reserve(cfg.sample_count);
  for (std::size_t i = 0; i < cfg.sample_count; ++i) {
    Instance p(d);
    std::vector<bool> keep(d);
    for (std::size_t j = 0; j < d; ++j) keep[j] = unit(rng) < 0.5;
    const Instance& row = data.rows[row_pick(rng)];
    for (std::size_t j = 0; j < d; ++j) p[j] = keep[j] ? z_e[j] : row[j];
    const double dist = palex_distance(z_e, p, *mined);
    n.weights.push_back(cfg.weight_map == PalexWeightMap::exp_neg
                            ? std::exp(-dist)
                            : 1.0 / (1.0 + dist));
    n.points.push_back(std::move(p));
  }
  if (mined->patterns.empty()) {
    n.warning = "palex: empty pattern set; distances are identically 0";
  }
  finalize_neighbourhood(model, n);
  return n;
}

}  // namespace lsx
