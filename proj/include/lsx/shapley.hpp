#pragma once

#include <cstdint>
#include <vector>

#include "lsx/types.hpp"

namespace lsx {

// Feature coalitions are bitmask-encoded: bit i set = feature i clamped to z_e.
using CoalitionMask = std::uint32_t;

inline constexpr std::size_t kShapleyEnumerationCap = 12;

/// (d - 1) / (C(d, s) * s * (d - s)); requires 1 <= s <= d-1.
double shapley_kernel_weight(std::size_t d, std::size_t s);

/// Background rows supplying values for unclamped features.
struct Background {
  std::vector<Instance> rows;
  std::size_t size() const { return rows.size(); }
};

/// Independence approximation of E[f(X) | X_Q = z_e,Q]: average of
/// predict_proba over hybrids taking clamped coordinates from z_e and the
/// rest from each background row, in row order.
double coalition_value(const BlackBoxModel& model, const Instance& z_e,
                       CoalitionMask mask, const Background& background);

/// Regression system for the kernel estimator: one row per proper non-empty
/// coalition, Shapley-kernel weighted, targets from coalition_value.
struct ShapleyProblem {
  std::size_t d = 0;
  std::vector<CoalitionMask> masks;
  std::vector<double> weights;
  std::vector<double> targets;
  double base_value = 0.0;  // empty coalition
  double full_value = 0.0;  // all features clamped
};

struct ShapleyResult {
  std::vector<double> phi;
  double base_value = 0.0;
};

enum class SubsetSource { full_enumeration, weighted_sample };

/// Builds the ShapleyProblem and solves the kernel regression with the
/// efficiency constraint sum(phi) = full - base eliminated algebraically.
/// Sampled mode draws m distinct subsets with probability proportional to
/// kernel weight by size, uniform within size.
ShapleyResult kernelshap_solve(const BlackBoxModel& model, const Instance& z_e,
                               const Background& background,
                               SubsetSource source = SubsetSource::full_enumeration,
                               std::size_t sample_m = 0, std::uint64_t seed = 0,
                               ShapleyProblem* problem_out = nullptr);

/// Brute-force oracle over all 2^d coalitions:
/// phi_i = sum_{Q not containing i} |Q|!(d-|Q|-1)!/d! (delta(Q+i) - delta(Q)).
ShapleyResult exact_shapley(const BlackBoxModel& model, const Instance& z_e,
                            const Background& background);

/// The Fig.-1-style point cloud: for every data row and every proper
/// non-empty coalition, the hybrid of z_e and that row, kernel-weighted.
/// `masks_out`, when given, receives the coalition of each emitted point.
Neighbourhood kernelshap_neighbourhood(const BlackBoxModel& model,
                                       const Dataset& data, const Instance& z_e,
                                       std::vector<CoalitionMask>* masks_out = nullptr);

/// Lloyd's k-means from k distinct seeded rows; centroids as background.
Background kmeans_background(const Dataset& data, std::size_t k,
                             std::size_t iterations, std::uint64_t seed,
                             std::vector<double>* wcss_trace = nullptr);

}  // namespace lsx
