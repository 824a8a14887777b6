#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "lsx/surrogates.hpp"

using namespace lsx;

TEST_SUITE_BEGIN("surrogates");

namespace {

std::vector<Instance> random_points(std::size_t n, std::size_t d, std::uint64_t seed) {
  Rng rng(seed);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::vector<Instance> out(n, Instance(d));
  for (auto& p : out) {
    for (auto& v : p) v = u(rng);
  }
  return out;
}

}  // namespace

TEST_CASE("ridge recovers a noiseless linear target exactly") {
  const auto points = random_points(40, 2, 1);
  std::vector<double> targets;
  for (const auto& p : points) targets.push_back(3.0 * p[0] - p[1] + 2.0);
  const LinearSurrogate s = fit_weighted_ridge(points, targets, {}, 0.0);
  CHECK(s.coefficients[0] == doctest::Approx(3.0).epsilon(1e-9));
  CHECK(s.coefficients[1] == doctest::Approx(-1.0).epsilon(1e-9));
  CHECK(s.intercept == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(attribution_of(s) == s.coefficients);
}

TEST_CASE("duplicating a point equals doubling its weight") {
  auto points = random_points(25, 3, 2);
  std::vector<double> targets;
  Rng rng(3);
  std::normal_distribution<double> g(0.0, 1.0);
  for (const auto& p : points) targets.push_back(p[0] - 0.5 * p[2] + 0.1 * g(rng));

  std::vector<double> weights(points.size(), 1.0);
  weights[4] = 2.0;
  const LinearSurrogate doubled = fit_weighted_ridge(points, targets, weights, 1e-8);

  auto dup_points = points;
  auto dup_targets = targets;
  dup_points.push_back(points[4]);
  dup_targets.push_back(targets[4]);
  const LinearSurrogate duplicated =
      fit_weighted_ridge(dup_points, dup_targets, {}, 1e-8);

  for (std::size_t j = 0; j < 3; ++j) {
    CHECK(doubled.coefficients[j] ==
          doctest::Approx(duplicated.coefficients[j]).epsilon(1e-10));
  }
  CHECK(doubled.intercept == doctest::Approx(duplicated.intercept).epsilon(1e-10));
}

TEST_CASE("zero-weight points have no influence") {
  auto points = random_points(30, 2, 4);
  std::vector<double> targets;
  for (const auto& p : points) targets.push_back(2.0 * p[0] + p[1]);
  std::vector<double> weights(points.size(), 1.0);
  for (std::size_t i = 25; i < 30; ++i) {
    weights[i] = 0.0;
    targets[i] = 100.0;  // would wreck the fit if it leaked in
  }
  const LinearSurrogate with_zeros = fit_weighted_ridge(points, targets, weights, 1e-9);
  points.resize(25);
  targets.resize(25);
  const LinearSurrogate without = fit_weighted_ridge(points, targets, {}, 1e-9);
  for (std::size_t j = 0; j < 2; ++j) {
    CHECK(std::abs(with_zeros.coefficients[j] - without.coefficients[j]) < 1e-12);
  }
  CHECK(std::abs(with_zeros.intercept - without.intercept) < 1e-12);
}

TEST_CASE("lambda 0 ridge satisfies residual orthogonality (OLS check)") {
  const auto points = random_points(60, 3, 5);
  std::vector<double> targets;
  Rng rng(6);
  std::normal_distribution<double> g(0.0, 0.5);
  for (const auto& p : points) targets.push_back(p[0] - p[1] + 0.3 * p[2] + g(rng));
  const LinearSurrogate s = fit_weighted_ridge(points, targets, {}, 0.0);
  for (std::size_t j = 0; j < 3; ++j) {
    double dot = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
      dot += points[i][j] * (targets[i] - s.predict(points[i]));
    }
    CHECK(std::abs(dot) < 1e-8);
  }
}

TEST_CASE("singular system at lambda 0 is reported") {
  // Feature 1 is a copy of feature 0.
  std::vector<Instance> points;
  std::vector<double> targets;
  for (int i = 0; i < 10; ++i) {
    points.push_back({static_cast<double>(i), static_cast<double>(i)});
    targets.push_back(i);
  }
  CHECK_THROWS_AS(fit_weighted_ridge(points, targets, {}, 0.0), std::runtime_error);
  CHECK_NOTHROW(fit_weighted_ridge(points, targets, {}, 1e-6));
}

TEST_CASE("ridge weight scaling invariance") {
  const auto points = random_points(30, 2, 7);
  std::vector<double> targets, weights;
  Rng rng(8);
  std::uniform_real_distribution<double> u(0.1, 2.0);
  for (const auto& p : points) {
    targets.push_back(p[0] * 0.7 - p[1] * 1.3);
    weights.push_back(u(rng));
  }
  const LinearSurrogate a = fit_weighted_ridge(points, targets, weights, 0.0);
  auto scaled = weights;
  for (auto& w : scaled) w *= 37.5;
  const LinearSurrogate b = fit_weighted_ridge(points, targets, scaled, 0.0);
  for (std::size_t j = 0; j < 2; ++j) {
    CHECK(a.coefficients[j] == doctest::Approx(b.coefficients[j]).epsilon(1e-12));
  }
}

TEST_CASE("pure single-class input yields a single leaf") {
  const TreeSurrogate t =
      fit_tree({{0.0}, {1.0}, {2.0}}, {1, 1, 1}, {}, 4, 1.0);
  CHECK(t.nodes.size() == 1);
  CHECK(t.depth() == 0);
  CHECK(t.predict_label({5.0}) == 1);
}

TEST_CASE("1-D data separable at 0.5 gives a depth-1 tree in the gap") {
  std::vector<Instance> points;
  std::vector<int> labels;
  for (double x : {0.0, 0.1, 0.2, 0.4}) {
    points.push_back({x});
    labels.push_back(0);
  }
  for (double x : {0.6, 0.7, 0.9, 1.0}) {
    points.push_back({x});
    labels.push_back(1);
  }
  const TreeSurrogate t = fit_tree(points, labels, {}, 3, 1.0);
  CHECK(t.depth() == 1);
  REQUIRE(t.nodes[0].feature == 0);
  CHECK(t.nodes[0].threshold > 0.4);
  CHECK(t.nodes[0].threshold < 0.6);
  std::vector<int> predicted;
  for (const auto& p : points) predicted.push_back(t.predict_label(p));
  CHECK(fidelity(predicted, labels) == 1.0);
}

TEST_CASE("tree depth never exceeds the configured maximum") {
  Rng rng(10);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Instance> points;
  std::vector<int> labels;
  for (int i = 0; i < 200; ++i) {
    points.push_back({u(rng), u(rng)});
    labels.push_back(u(rng) < 0.5 ? 0 : 1);  // noisy labels force deep growth
  }
  for (int depth = 1; depth <= 5; ++depth) {
    CHECK(fit_tree(points, labels, {}, depth, 1.0).depth() <= depth);
  }
}

TEST_CASE("tree training fidelity is non-decreasing in max depth") {
  Rng rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Instance> points;
  std::vector<int> labels;
  for (int i = 0; i < 300; ++i) {
    const Instance p{u(rng), u(rng)};
    labels.push_back(p[0] * p[1] > 0.0 ? 1 : 0);  // XOR-ish, needs depth 2
    points.push_back(p);
  }
  double prev = 0.0;
  for (int depth = 1; depth <= 4; ++depth) {
    const TreeSurrogate t = fit_tree(points, labels, {}, depth, 1.0);
    std::vector<int> predicted;
    for (const auto& p : points) predicted.push_back(t.predict_label(p));
    const double fid = fidelity(predicted, labels);
    CHECK(fid >= prev);
    prev = fid;
  }
  CHECK(prev == 1.0);
}

TEST_CASE("tree weight scaling leaves the split structure unchanged") {
  Rng rng(12);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Instance> points;
  std::vector<int> labels;
  std::vector<double> weights;
  for (int i = 0; i < 100; ++i) {
    points.push_back({u(rng), u(rng)});
    labels.push_back(points.back()[0] > 0.6 ? 1 : 0);
    weights.push_back(0.5 + u(rng));
  }
  const TreeSurrogate a = fit_tree(points, labels, weights, 3, 0.0);
  auto scaled = weights;
  for (auto& w : scaled) w *= 1000.0;
  const TreeSurrogate b = fit_tree(points, labels, scaled, 3, 0.0);
  REQUIRE(a.nodes.size() == b.nodes.size());
  for (std::size_t i = 0; i < a.nodes.size(); ++i) {
    CHECK(a.nodes[i].feature == b.nodes[i].feature);
    CHECK(a.nodes[i].threshold == b.nodes[i].threshold);
    CHECK(a.nodes[i].leaf_class == b.nodes[i].leaf_class);
  }
}

TEST_CASE("tree rule listing mentions features and classes") {
  const TreeSurrogate t = fit_tree({{0.0}, {1.0}}, {0, 1}, {}, 2, 0.5);
  const std::string text = t.to_text({"age"});
  CHECK(text.find("age <=") != std::string::npos);
  CHECK(text.find("class 0") != std::string::npos);
  CHECK(text.find("class 1") != std::string::npos);
}

TEST_CASE("tree rejects bad input") {
  CHECK_THROWS_AS(fit_tree({}, {}, {}, 3, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(fit_tree({{0.0}}, {2}, {}, 3, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(fit_tree({{0.0}}, {0}, {}, 0, 1.0), std::invalid_argument);
}

TEST_SUITE_END();
