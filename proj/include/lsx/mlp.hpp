#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lsx/types.hpp"

namespace lsx {

/// d -> hidden -> 1 network, tanh hidden layer, logistic output. Immutable
/// once trained; serves as the opaque classifier for the whole toolkit.
class MlpModel : public BlackBoxModel {
 public:
  MlpModel() = default;
  MlpModel(std::size_t input_dim, std::size_t hidden, std::uint64_t seed);

  double predict_proba(const Instance& x) const override;

  std::size_t input_dim() const { return input_dim_; }
  std::size_t hidden() const { return hidden_; }

  /// Flat parameter view in the fixed order w1 (h x d, row-major), b1, w2, b2.
  std::vector<double> parameters() const;
  void set_parameters(const std::vector<double>& theta);

  /// Mean binary cross-entropy over the dataset.
  double loss(const Dataset& data) const;
  /// Gradient of the mean BCE loss in the flat parameter order.
  std::vector<double> loss_gradient(const Dataset& data) const;

  double accuracy(const Dataset& data) const;

  void save(const std::string& path) const;
  static MlpModel load(const std::string& path);

 private:
  std::size_t input_dim_ = 0;
  std::size_t hidden_ = 0;
  std::vector<double> w1_;  // hidden x input_dim, row-major
  std::vector<double> b1_;
  std::vector<double> w2_;  // 1 x hidden
  double b2_ = 0.0;
};

struct TrainConfig {
  std::size_t hidden = 16;
  std::size_t epochs = 2000;
  double learning_rate = 0.5;
  std::uint64_t seed = 0;
};

/// Full-batch gradient descent on mean BCE from a small random init.
/// Throws if the data is unlabeled or the loss turns non-finite.
MlpModel train_mlp(const Dataset& data, const TrainConfig& cfg);

}  // namespace lsx
