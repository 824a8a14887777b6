#include "lsx/mlp.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "lsx/util.hpp"

namespace lsx {

namespace {

double logistic(double z) { return 1.0 / (1.0 + std::exp(-z)); }

double clamp_proba(double p) {
  return std::min(1.0 - 1e-12, std::max(1e-12, p));
}

}  // namespace

MlpModel::MlpModel(std::size_t input_dim, std::size_t hidden, std::uint64_t seed)
    : input_dim_(input_dim), hidden_(hidden) {
  if (input_dim == 0 || hidden == 0) {
    throw std::invalid_argument("mlp: dimensions must be >= 1");
  }
  Rng rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const double s1 = 1.0 / std::sqrt(static_cast<double>(input_dim));
  const double s2 = 1.0 / std::sqrt(static_cast<double>(hidden));
  w1_.resize(hidden * input_dim);
  b1_.assign(hidden, 0.0);
  w2_.resize(hidden);
  for (auto& w : w1_) w = gauss(rng) * s1;
  for (auto& w : w2_) w = gauss(rng) * s2;
  b2_ = 0.0;
}

double MlpModel::predict_proba(const Instance& x) const {
  if (x.size() != input_dim_) {
    throw std::invalid_argument("mlp: input dimension mismatch");
  }
  double z_out = b2_;
  for (std::size_t j = 0; j < hidden_; ++j) {
    double z = b1_[j];
    const double* wrow = &w1_[j * input_dim_];
    for (std::size_t i = 0; i < input_dim_; ++i) z += wrow[i] * x[i];
    z_out += w2_[j] * std::tanh(z);
  }
  return logistic(z_out);
}

std::vector<double> MlpModel::parameters() const {
  std::vector<double> theta;
  theta.reserve(w1_.size() + b1_.size() + w2_.size() + 1);
  theta.insert(theta.end(), w1_.begin(), w1_.end());
  theta.insert(theta.end(), b1_.begin(), b1_.end());
  theta.insert(theta.end(), w2_.begin(), w2_.end());
  theta.push_back(b2_);
  return theta;
}

void MlpModel::set_parameters(const std::vector<double>& theta) {
  const std::size_t expected = w1_.size() + b1_.size() + w2_.size() + 1;
  if (theta.size() != expected) {
    throw std::invalid_argument("mlp: parameter vector size mismatch");
  }
  std::size_t k = 0;
  for (auto& w : w1_) w = theta[k++];
  for (auto& b : b1_) b = theta[k++];
  for (auto& w : w2_) w = theta[k++];
  b2_ = theta[k];
}

double MlpModel::loss(const Dataset& data) const {
  if (!data.labeled()) throw std::invalid_argument("mlp: unlabeled data");
  double total = 0.0;
  for (std::size_t i = 0; i < data.rows.size(); ++i) {
    const double p = clamp_proba(predict_proba(data.rows[i]));
    total += data.labels[i] ? -std::log(p) : -std::log(1.0 - p);
  }
  return total / static_cast<double>(data.rows.size());
}

std::vector<double> MlpModel::loss_gradient(const Dataset& data) const {
  if (!data.labeled()) throw std::invalid_argument("mlp: unlabeled data");
  const std::size_t n = data.rows.size();
  const std::size_t d = input_dim_, h = hidden_;
  std::vector<double> gw1(h * d, 0.0), gb1(h, 0.0), gw2(h, 0.0);
  double gb2 = 0.0;
  std::vector<double> hidden(h);

  for (std::size_t i = 0; i < n; ++i) {
    const Instance& x = data.rows[i];
    double z_out = b2_;
    for (std::size_t j = 0; j < h; ++j) {
      double z = b1_[j];
      const double* wrow = &w1_[j * d];
      for (std::size_t k = 0; k < d; ++k) z += wrow[k] * x[k];
      hidden[j] = std::tanh(z);
      z_out += w2_[j] * hidden[j];
    }
    const double p = logistic(z_out);
    const double delta = (p - static_cast<double>(data.labels[i])) /
                         static_cast<double>(n);
    gb2 += delta;
    for (std::size_t j = 0; j < h; ++j) {
      gw2[j] += delta * hidden[j];
      const double dh = delta * w2_[j] * (1.0 - hidden[j] * hidden[j]);
      gb1[j] += dh;
      double* grow = &gw1[j * d];
      for (std::size_t k = 0; k < d; ++k) grow[k] += dh * x[k];
    }
  }

  std::vector<double> grad;
  grad.reserve(gw1.size() + gb1.size() + gw2.size() + 1);
  grad.insert(grad.end(), gw1.begin(), gw1.end());
  grad.insert(grad.end(), gb1.begin(), gb1.end());
  grad.insert(grad.end(), gw2.begin(), gw2.end());
  grad.push_back(gb2);
  return grad;
}

double MlpModel::accuracy(const Dataset& data) const {
  if (!data.labeled()) throw std::invalid_argument("mlp: unlabeled data");
  std::size_t correct = 0;
  for (std::size_t i = 0; i < data.rows.size(); ++i) {
    correct += predict_label(data.rows[i]) == data.labels[i];
  }
  return static_cast<double>(correct) / static_cast<double>(data.rows.size());
}

void MlpModel::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("mlp: cannot write " + path);
  out << "lsx-mlp 1\n";
  out << input_dim_ << " " << hidden_ << " 1\n";
  auto write_row = [&out](const std::vector<double>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      out << (i ? " " : "") << format_double(v[i]);
    }
    out << "\n";
  };
  write_row(w1_);
  write_row(b1_);
  write_row(w2_);
  out << format_double(b2_) << "\n";
  if (!out) throw std::runtime_error("mlp: write failed for " + path);
}

MlpModel MlpModel::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("mlp: cannot open " + path);
  std::string magic;
  int version = 0;
  in >> magic >> version;
  if (magic != "lsx-mlp" || version != 1) {
    throw std::runtime_error("mlp: unrecognized model file " + path);
  }
  std::size_t d = 0, h = 0, out_dim = 0;
  in >> d >> h >> out_dim;
  if (!in || d == 0 || h == 0 || out_dim != 1) {
    throw std::runtime_error("mlp: bad layer header in " + path);
  }
  MlpModel m;
  m.input_dim_ = d;
  m.hidden_ = h;
  m.w1_.resize(h * d);
  m.b1_.resize(h);
  m.w2_.resize(h);
  auto read_all = [&in, &path](std::vector<double>& v) {
    for (auto& x : v) {
      if (!(in >> x)) throw std::runtime_error("mlp: truncated model file " + path);
    }
  };
  read_all(m.w1_);
  read_all(m.b1_);
  read_all(m.w2_);
  if (!(in >> m.b2_)) throw std::runtime_error("mlp: truncated model file " + path);
  return m;
}

MlpModel train_mlp(const Dataset& data, const TrainConfig& cfg) {
  if (!data.labeled()) throw std::invalid_argument("train_mlp: unlabeled data");
  if (cfg.hidden == 0) throw std::invalid_argument("train_mlp: hidden must be >= 1");
  if (cfg.learning_rate <= 0.0) {
    throw std::invalid_argument("train_mlp: learning rate must be > 0");
  }
  for (int label : data.labels) {
    if (label != 0 && label != 1) {
      throw std::invalid_argument("train_mlp: labels must be binary");
    }
  }

  MlpModel model(data.dim(), cfg.hidden, cfg.seed);
  std::vector<double> theta = model.parameters();
  for (std::size_t epoch = 0; epoch < cfg.epochs; ++epoch) {
    const std::vector<double> grad = model.loss_gradient(data);
    for (std::size_t k = 0; k < theta.size(); ++k) {
      theta[k] -= cfg.learning_rate * grad[k];
    }
    model.set_parameters(theta);
  }
  const double final_loss = model.loss(data);
  if (!std::isfinite(final_loss)) {
    throw std::runtime_error("train_mlp: non-finite loss (lower the learning rate)");
  }
  return model;
}

}  // namespace lsx
