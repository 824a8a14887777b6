#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lsx {

inline constexpr const char* kVersion = "0.1.0";

/// A single point in feature space.
using Instance = std::vector<double>;

enum class FeatureKind { continuous, categorical };

struct FeatureMeta {
  FeatureKind kind = FeatureKind::continuous;
  double min = 0.0;
  double max = 0.0;
  double std = 0.0;  // population std of the observed values
};

/// Tabular data: n rows sharing dimension d, optional binary labels,
/// per-feature summary statistics.
struct Dataset {
  std::vector<Instance> rows;
  std::vector<int> labels;  // empty when unlabeled
  std::vector<FeatureMeta> meta;
  std::vector<std::string> feature_names;

  std::size_t size() const { return rows.size(); }
  std::size_t dim() const { return rows.empty() ? 0 : rows.front().size(); }
  bool labeled() const { return !labels.empty(); }
};

/// Recomputes meta (kind preserved if already set) from the current rows.
void refresh_meta(Dataset& data);

/// Opaque binary classifier. Implementations must be deterministic and
/// safe for concurrent read-only use once constructed.
class BlackBoxModel {
 public:
  virtual ~BlackBoxModel() = default;

  /// Probability of class 1, in [0, 1].
  virtual double predict_proba(const Instance& x) const = 0;

  int predict_label(const Instance& x) const {
    return predict_proba(x) >= 0.5 ? 1 : 0;
  }
};

/// Wraps a plain function as a black box; used by tests and small demos.
class FunctionModel : public BlackBoxModel {
 public:
  explicit FunctionModel(std::function<double(const Instance&)> fn)
      : fn_(std::move(fn)) {}
  double predict_proba(const Instance& x) const override { return fn_(x); }

 private:
  std::function<double(const Instance&)> fn_;
};

enum class Strategy { lime, gsls, lore, leap, kernelshap, palex };

const char* strategy_name(Strategy s);
Strategy strategy_from_name(const std::string& name);

/// The extracted dataset D_N a surrogate is fitted on: points, optional
/// per-point weights, black-box labels and probabilities.
struct Neighbourhood {
  std::vector<Instance> points;
  std::vector<double> weights;  // empty means "no weights"
  std::vector<int> bb_labels;
  std::vector<double> bb_probas;
  Strategy strategy = Strategy::lime;
  std::uint64_t seed = 0;
  std::string warning;  // non-empty when a generator had to degrade

  std::size_t size() const { return points.size(); }
  bool weighted() const { return !weights.empty(); }
};

/// Labels every point with the model and validates shared lengths.
void finalize_neighbourhood(const BlackBoxModel& model, Neighbourhood& n);

/// Readable output of a fitted surrogate: either a per-feature attribution
/// vector or a tree rule listing, plus fidelity and provenance.
struct Explanation {
  std::string method;
  std::optional<std::vector<double>> attribution;
  std::optional<std::string> tree_rules;
  std::optional<double> base_value;
  double fidelity = 0.0;
  std::uint64_t seed = 0;
  std::string config_digest;

  std::string to_json() const;  // fixed key names, deterministic bytes
};

/// Weighted fraction of agreeing labels; unweighted when weights is empty.
double fidelity(const std::vector<int>& surrogate_labels,
                const std::vector<int>& bb_labels,
                const std::vector<double>& weights = {});

}  // namespace lsx
