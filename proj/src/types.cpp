#include "lsx/types.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lsx/util.hpp"
#include "nlohmann/json.hpp"

namespace lsx {

void refresh_meta(Dataset& data) {
  const std::size_t d = data.dim();
  std::vector<FeatureMeta> meta(d);
  for (std::size_t j = 0; j < d; ++j) {
    if (j < data.meta.size()) meta[j].kind = data.meta[j].kind;
    double mn = std::numeric_limits<double>::infinity();
    double mx = -std::numeric_limits<double>::infinity();
    double sum = 0.0;
    for (const auto& row : data.rows) {
      mn = std::min(mn, row[j]);
      mx = std::max(mx, row[j]);
      sum += row[j];
    }
    const double mean = data.rows.empty() ? 0.0 : sum / data.rows.size();
    double var = 0.0;
    for (const auto& row : data.rows) {
      const double diff = row[j] - mean;
      var += diff * diff;
    }
    meta[j].min = data.rows.empty() ? 0.0 : mn;
    meta[j].max = data.rows.empty() ? 0.0 : mx;
    meta[j].std = data.rows.empty() ? 0.0 : std::sqrt(var / data.rows.size());
  }
  data.meta = std::move(meta);
}

const char* strategy_name(Strategy s) {
  switch (s) {
    case Strategy::lime: return "lime";
    case Strategy::gsls: return "gsls";
    case Strategy::lore: return "lore";
    case Strategy::leap: return "leap";
    case Strategy::kernelshap: return "kernelshap";
    case Strategy::palex: return "palex";
  }
  return "unknown";
}

Strategy strategy_from_name(const std::string& name) {
  if (name == "lime") return Strategy::lime;
  if (name == "gsls") return Strategy::gsls;
  if (name == "lore") return Strategy::lore;
  if (name == "leap") return Strategy::leap;
  if (name == "kernelshap") return Strategy::kernelshap;
  if (name == "palex") return Strategy::palex;
  throw std::invalid_argument(
      "unknown method '" + name +
      "' (valid: lime, gsls, lore, leap, kernelshap, palex)");
}

void finalize_neighbourhood(const BlackBoxModel& model, Neighbourhood& n) {
  n.bb_labels.resize(n.points.size());
  n.bb_probas.resize(n.points.size());
  for (std::size_t i = 0; i < n.points.size(); ++i) {
    check_finite(n.points[i], "neighbourhood point");
    n.bb_probas[i] = model.predict_proba(n.points[i]);
    n.bb_labels[i] = n.bb_probas[i] >= 0.5 ? 1 : 0;
  }
  if (!n.weights.empty() && n.weights.size() != n.points.size()) {
    throw std::logic_error("neighbourhood weights/points length mismatch");
  }
  for (double w : n.weights) {
    if (!std::isfinite(w) || w < 0.0) {
      throw std::logic_error("neighbourhood weight must be finite and >= 0");
    }
  }
}

std::string Explanation::to_json() const {
  nlohmann::json doc;
  doc["method"] = method;
  if (attribution) {
    doc["attribution"] = *attribution;
  } else if (tree_rules) {
    doc["tree"] = *tree_rules;
  }
  doc["base_value"] = base_value ? nlohmann::json(*base_value) : nlohmann::json();
  doc["fidelity"] = fidelity;
  doc["seed"] = seed;
  doc["config_digest"] = config_digest;
  doc["version"] = kVersion;
  return doc.dump(2) + "\n";
}

double fidelity(const std::vector<int>& surrogate_labels,
                const std::vector<int>& bb_labels,
                const std::vector<double>& weights) {
  if (surrogate_labels.empty() || surrogate_labels.size() != bb_labels.size()) {
    throw std::invalid_argument("fidelity: empty or mismatched label vectors");
  }
  if (weights.empty()) {
    std::size_t agree = 0;
    for (std::size_t i = 0; i < bb_labels.size(); ++i) {
      agree += surrogate_labels[i] == bb_labels[i];
    }
    return static_cast<double>(agree) / static_cast<double>(bb_labels.size());
  }
  if (weights.size() != bb_labels.size()) {
    throw std::invalid_argument("fidelity: weights length mismatch");
  }
  double total = 0.0, agree = 0.0;
  for (std::size_t i = 0; i < bb_labels.size(); ++i) {
    total += weights[i];
    if (surrogate_labels[i] == bb_labels[i]) agree += weights[i];
  }
  if (total <= 0.0) throw std::invalid_argument("fidelity: weight sum must be > 0");
  return agree / total;
}

}  // namespace lsx
