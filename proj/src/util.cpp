#include "lsx/util.hpp"

#include <cmath>
#include <cstdio>

namespace lsx {

std::uint64_t strategy_seed(std::uint64_t root_seed, Strategy s) {
  return root_seed + 1000 * (static_cast<std::uint64_t>(s) + 1);
}

Instance random_direction(Rng& rng, std::size_t d) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Instance dir(d);
  double norm = 0.0;
  do {
    norm = 0.0;
    for (auto& v : dir) {
      v = gauss(rng);
      norm += v * v;
    }
  } while (norm == 0.0);
  norm = std::sqrt(norm);
  for (auto& v : dir) v /= norm;
  return dir;
}

Instance random_in_shell(Rng& rng, const Instance& center, double r_inner,
                         double r_outer) {
  const std::size_t d = center.size();
  Instance p = random_direction(rng, d);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  // Radius density ~ r^(d-1): invert the shell CDF.
  const double lo = std::pow(r_inner, static_cast<double>(d));
  const double hi = std::pow(r_outer, static_cast<double>(d));
  const double r = std::pow(lo + unit(rng) * (hi - lo), 1.0 / static_cast<double>(d));
  for (std::size_t i = 0; i < d; ++i) p[i] = center[i] + r * p[i];
  return p;
}

Instance random_in_ball(Rng& rng, const Instance& center, double radius) {
  return random_in_shell(rng, center, 0.0, radius);
}

double squared_distance(const Instance& a, const Instance& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double diff = a[i] - b[i];
    s += diff * diff;
  }
  return s;
}

double euclidean_distance(const Instance& a, const Instance& b) {
  return std::sqrt(squared_distance(a, b));
}

std::string fnv1a_digest(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void check_finite(const Instance& x, const char* what) {
  for (double v : x) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument(std::string(what) + ": non-finite value");
    }
  }
}

}  // namespace lsx
