#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <span>
#include <string_view>

namespace diffscaler {

/// Deterministic seeded RNG. Normal variates use an explicit Box-Muller
/// transform instead of std::normal_distribution, whose sequence is
/// implementation-defined; frozen test values depend on this one.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // [0,1)
  double uniform() {
    return (gen_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // [0,n)
  std::int64_t uniform_int(std::int64_t n) {
    return static_cast<std::int64_t>(gen_() % static_cast<std::uint64_t>(n));
  }

  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    do {
      u1 = uniform();
    } while (u1 <= 0.0);
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

  double normal(double mean, double stddev) { return mean + stddev * normal(); }

  template <typename T>
  void fill_normal(std::span<T> out, double mean, double stddev) {
    for (auto& v : out) v = static_cast<T>(normal(mean, stddev));
  }

  template <typename T>
  void fill_uniform(std::span<T> out, double lo, double hi) {
    for (auto& v : out) v = static_cast<T>(uniform(lo, hi));
  }

  /// Independent stream derived from this seed and a salt. Used to give each
  /// layer / task its own stream without coupling consumption order.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t salt) {
    // splitmix64 over the mixed pair
    std::uint64_t z = seed ^ (salt + 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  static std::uint64_t hash_str(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
    for (unsigned char c : s) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
    return h;
  }

 private:
  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace diffscaler
