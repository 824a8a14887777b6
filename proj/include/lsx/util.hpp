#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lsx/types.hpp"

namespace lsx {

/// Root seed plus a fixed per-strategy offset, so one seed drives a
/// reproducible comparison across strategies.
std::uint64_t strategy_seed(std::uint64_t root_seed, Strategy s);

using Rng = std::mt19937_64;

/// Unit vector uniform on the (d-1)-sphere.
Instance random_direction(Rng& rng, std::size_t d);

/// Uniform draw from the closed ball of radius `radius` around `center`.
Instance random_in_ball(Rng& rng, const Instance& center, double radius);

/// Uniform draw from the spherical shell r_inner <= ||x - center|| <= r_outer.
Instance random_in_shell(Rng& rng, const Instance& center, double r_inner,
                         double r_outer);

double squared_distance(const Instance& a, const Instance& b);
double euclidean_distance(const Instance& a, const Instance& b);

/// FNV-1a over the bytes of a string; rendered as 16 hex digits.
std::string fnv1a_digest(const std::string& bytes);

/// Shortest text that round-trips the double bit-exactly ("%.17g").
std::string format_double(double v);

void check_finite(const Instance& x, const char* what);

}  // namespace lsx
