#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "lsx/mlp.hpp"
#include "lsx/shapley.hpp"

using namespace lsx;
using test::make_dataset;

TEST_SUITE_BEGIN("shapley");

namespace {

Background random_background(std::size_t n, std::size_t d, std::uint64_t seed) {
  Rng rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Background bg;
  bg.rows.assign(n, Instance(d));
  for (auto& row : bg.rows) {
    for (auto& v : row) v = u(rng);
  }
  return bg;
}

Instance random_instance(std::size_t d, std::uint64_t seed) {
  Rng rng(seed ^ 0x9e3779b97f4a7c15ull);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Instance x(d);
  for (auto& v : x) v = u(rng);
  return x;
}

}  // namespace

TEST_CASE("kernel weight evaluates the printed formula") {
  CHECK(shapley_kernel_weight(4, 1) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(shapley_kernel_weight(4, 2) == doctest::Approx(0.125).epsilon(1e-15));
  CHECK_THROWS_AS(shapley_kernel_weight(4, 0), std::invalid_argument);
  CHECK_THROWS_AS(shapley_kernel_weight(4, 4), std::invalid_argument);
  for (std::size_t d = 2; d <= 10; ++d) {
    for (std::size_t s = 1; s < d; ++s) {
      CHECK(shapley_kernel_weight(d, s) ==
            doctest::Approx(shapley_kernel_weight(d, d - s)).epsilon(1e-14));
    }
  }
}

TEST_CASE("coalition value: full mask, empty mask, and the linear closed form") {
  const Instance z_e{0.7, -0.3};
  const Background bg = random_background(10, 2, 1);
  const FunctionModel linear(
      [](const Instance& x) { return 0.1 * x[0] + 0.2 * x[1] + 0.3; });

  CHECK(coalition_value(linear, z_e, 0b11, bg) == linear.predict_proba(z_e));

  double mean = 0.0;
  for (const auto& row : bg.rows) mean += linear.predict_proba(row);
  mean /= static_cast<double>(bg.size());
  CHECK(coalition_value(linear, z_e, 0, bg) == doctest::Approx(mean).epsilon(1e-15));

  // Mask {feature 0}: a0*z0 + a1*mean(bg_1) + b.
  double mean1 = 0.0;
  for (const auto& row : bg.rows) mean1 += row[1];
  mean1 /= static_cast<double>(bg.size());
  const double expected = 0.1 * z_e[0] + 0.2 * mean1 + 0.3;
  CHECK(std::abs(coalition_value(linear, z_e, 0b01, bg) - expected) < 1e-12);
}

TEST_CASE("exact shapley on a linear game matches the closed form") {
  const FunctionModel linear(
      [](const Instance& x) { return 2.0 * x[0] + 3.0 * x[1]; });
  Background bg;
  bg.rows = {{1.0, -1.0}, {-1.0, 1.0}};  // component means are (0, 0)
  const ShapleyResult r = exact_shapley(linear, {1.0, 1.0}, bg);
  CHECK(r.phi[0] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(r.phi[1] == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(r.base_value == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("dummy feature gets exactly zero attribution") {
  const FunctionModel ignores_x2(
      [](const Instance& x) { return 0.8 * x[0] + 0.1; });
  const Background bg = random_background(7, 2, 2);
  const ShapleyResult r = exact_shapley(ignores_x2, random_instance(2, 3), bg);
  CHECK(r.phi[1] == 0.0);
}

TEST_CASE("symmetric game splits the payout equally") {
  const FunctionModel sum([](const Instance& x) { return x[0] + x[1]; });
  Background bg;
  bg.rows = {{0.2, 0.2}, {-0.4, -0.4}, {0.1, 0.1}};  // exchangeable components
  const ShapleyResult r = exact_shapley(sum, {0.9, 0.9}, bg);
  CHECK(std::abs(r.phi[0] - r.phi[1]) < 1e-12);
}

TEST_CASE("additivity: the value of f+g is the sum of the parts") {
  const std::size_t d = 4;
  const Background bg = random_background(6, d, 4);
  const Instance z_e = random_instance(d, 5);
  const FunctionModel f([](const Instance& x) { return std::tanh(x[0] - x[2]); });
  const FunctionModel g([](const Instance& x) { return 0.5 * x[1] * x[3]; });
  const FunctionModel fg([](const Instance& x) {
    return std::tanh(x[0] - x[2]) + 0.5 * x[1] * x[3];
  });
  const ShapleyResult rf = exact_shapley(f, z_e, bg);
  const ShapleyResult rg = exact_shapley(g, z_e, bg);
  const ShapleyResult rfg = exact_shapley(fg, z_e, bg);
  for (std::size_t i = 0; i < d; ++i) {
    CHECK(std::abs(rfg.phi[i] - (rf.phi[i] + rg.phi[i])) < 1e-10);
  }
}

TEST_CASE("kernel regression equals the oracle under full enumeration") {
  for (std::size_t d = 2; d <= 8; ++d) {
    for (std::uint64_t trial = 0; trial < 3; ++trial) {
      const std::uint64_t seed = d * 100 + trial;
      const MlpModel model(d, 5, seed);
      const Background bg = random_background(10, d, seed + 1);
      const Instance z_e = random_instance(d, seed + 2);
      const ShapleyResult kernel = kernelshap_solve(model, z_e, bg);
      const ShapleyResult oracle = exact_shapley(model, z_e, bg);
      REQUIRE(kernel.phi.size() == d);
      for (std::size_t i = 0; i < d; ++i) {
        CHECK(std::abs(kernel.phi[i] - oracle.phi[i]) <= 1e-8);
      }
      // Efficiency is enforced algebraically.
      double total = kernel.base_value;
      for (double phi : kernel.phi) total += phi;
      CHECK(std::abs(total - model.predict_proba(z_e)) <= 1e-10);
    }
  }
}

TEST_CASE("d = 1 bypasses the regression with the direct difference") {
  const FunctionModel f([](const Instance& x) { return 0.3 * x[0] + 0.4; });
  Background bg;
  bg.rows = {{0.0}, {1.0}};
  const ShapleyResult r = kernelshap_solve(f, {2.0}, bg);
  REQUIRE(r.phi.size() == 1);
  CHECK(r.phi[0] ==
        doctest::Approx(f.predict_proba({2.0}) - r.base_value).epsilon(1e-14));
}

TEST_CASE("sampled mode covering every subset equals full enumeration") {
  const std::size_t d = 4;
  const MlpModel model(d, 4, 9);
  const Background bg = random_background(5, d, 10);
  const Instance z_e = random_instance(d, 11);
  const ShapleyResult full = kernelshap_solve(model, z_e, bg);
  const ShapleyResult sampled = kernelshap_solve(
      model, z_e, bg, SubsetSource::weighted_sample, (1u << d) - 2, 77);
  for (std::size_t i = 0; i < d; ++i) {
    CHECK(sampled.phi[i] == doctest::Approx(full.phi[i]).epsilon(1e-10));
  }
  CHECK_THROWS_AS(kernelshap_solve(model, z_e, bg,
                                   SubsetSource::weighted_sample, 2, 1),
                  std::invalid_argument);
}

TEST_CASE("sampled mode with partial coverage stays close and is deterministic") {
  const std::size_t d = 6;
  const MlpModel model(d, 5, 12);
  const Background bg = random_background(8, d, 13);
  const Instance z_e = random_instance(d, 14);
  const ShapleyResult a = kernelshap_solve(model, z_e, bg,
                                           SubsetSource::weighted_sample, 40, 5);
  const ShapleyResult b = kernelshap_solve(model, z_e, bg,
                                           SubsetSource::weighted_sample, 40, 5);
  CHECK(a.phi == b.phi);
}

TEST_CASE("kernelshap neighbourhood enumerates hybrids per the algorithm") {
  const FunctionModel f([](const Instance& x) { return x[0] > 0 ? 1.0 : 0.0; });
  const Dataset data = make_dataset({{5.0, 6.0}});
  const Instance z_e{1.0, 2.0};
  std::vector<CoalitionMask> masks;
  const Neighbourhood n = kernelshap_neighbourhood(f, data, z_e, &masks);
  REQUIRE(n.size() == 2);  // N * (2^d - 2) with N=1, d=2
  // Exactly {(z1, b2), (b1, z2)}.
  CHECK(n.points[0] == Instance{1.0, 6.0});
  CHECK(n.points[1] == Instance{5.0, 2.0});
  CHECK(n.weights[0] == doctest::Approx(0.5).epsilon(1e-15));

  const Dataset big = make_dataset(
      {{1.0, 1.0, 1.0}, {2.0, 2.0, 2.0}, {3.0, 3.0, 3.0}});
  const Instance z3{0.0, 0.0, 0.0};
  const Neighbourhood n3 = kernelshap_neighbourhood(f, big, z3);
  CHECK(n3.size() == 3 * 6);  // N * (2^3 - 2)
  for (const auto& p : n3.points) {
    bool matches_ze = false, matches_row = false;
    for (std::size_t j = 0; j < 3; ++j) {
      if (p[j] == z3[j]) matches_ze = true;
      if (p[j] != z3[j]) matches_row = true;
    }
    CHECK(matches_ze);
    CHECK(matches_row);
  }
}

TEST_CASE("enumeration caps are enforced") {
  const FunctionModel f([](const Instance&) { return 0.5; });
  const Background bg = random_background(2, 13, 20);
  CHECK_THROWS_AS(exact_shapley(f, random_instance(13, 21), bg),
                  std::invalid_argument);
  CHECK_THROWS_AS(kernelshap_solve(f, random_instance(13, 22), bg),
                  std::invalid_argument);
}

TEST_CASE("kmeans: k = n returns the data rows") {
  const Dataset data = make_dataset({{0.0, 0.0}, {1.0, 1.0}, {2.0, 2.0}});
  const Background bg = kmeans_background(data, 3, 10, 1);
  REQUIRE(bg.size() == 3);
  for (const auto& row : data.rows) {
    CHECK(std::count(bg.rows.begin(), bg.rows.end(), row) == 1);
  }
  CHECK_THROWS_AS(kmeans_background(data, 4, 5, 1), std::invalid_argument);
}

TEST_CASE("kmeans finds well-separated blob centers and WCSS is monotone") {
  Rng rng(30);
  std::normal_distribution<double> g(0.0, 0.05);
  std::vector<Instance> rows;
  for (int i = 0; i < 60; ++i) {
    rows.push_back({-1.0 + g(rng), -1.0 + g(rng)});
    rows.push_back({1.0 + g(rng), 1.0 + g(rng)});
  }
  const Dataset data = make_dataset(rows);
  std::vector<double> wcss;
  const Background bg = kmeans_background(data, 2, 20, 3, &wcss);
  REQUIRE(bg.size() == 2);
  for (std::size_t i = 1; i < wcss.size(); ++i) CHECK(wcss[i] <= wcss[i - 1] + 1e-12);
  const bool a_is_neg = bg.rows[0][0] < 0.0;
  const Instance& neg = a_is_neg ? bg.rows[0] : bg.rows[1];
  const Instance& pos = a_is_neg ? bg.rows[1] : bg.rows[0];
  CHECK(euclidean_distance(neg, {-1.0, -1.0}) < 0.1);
  CHECK(euclidean_distance(pos, {1.0, 1.0}) < 0.1);
}

TEST_SUITE_END();
