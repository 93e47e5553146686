#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "point.hpp"

namespace moreau {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Seeded generator with a platform-independent uniform mapping, so that a
// fixed seed yields byte-identical sample streams everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}

  std::uint64_t next_u64() { return g_(); }

  double uniform01() { return (g_() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform01(); }

  Point point_in(const Box& box) {
    Point x(box.dim());
    for (std::size_t i = 0; i < box.dim(); ++i) x[i] = uniform(box.lo[i], box.hi[i]);
    return x;
  }

 private:
  std::mt19937_64 g_;
};

// Additive (Kronecker) low-discrepancy sequence on the unit cube with seeded
// phases. Random access keeps prefixes stable: the first n points of a longer
// run equal the n-point run, which makes budget-doubling monotone.
class WeylSequence {
 public:
  WeylSequence(std::size_t dims, std::uint64_t seed) : alpha_(dims), offset_(dims) {
    static constexpr int primes[] = {2,  3,  5,  7,  11, 13, 17, 19,
                                     23, 29, 31, 37, 41, 43, 47, 53};
    std::uint64_t s = seed ^ 0x5bf0a8b1fe93dd87ULL;
    for (std::size_t j = 0; j < dims; ++j) {
      double r = std::sqrt(static_cast<double>(primes[j % 16]) + 16.0 * (j / 16));
      alpha_[j] = r - std::floor(r);
      offset_[j] = (splitmix64(s) >> 11) * 0x1.0p-53;
    }
  }

  std::size_t dims() const { return alpha_.size(); }

  std::vector<double> at(std::uint64_t k) const {
    std::vector<double> u(alpha_.size());
    for (std::size_t j = 0; j < alpha_.size(); ++j) {
      double v = offset_[j] + static_cast<double>(k + 1) * alpha_[j];
      u[j] = v - std::floor(v);
    }
    return u;
  }

 private:
  std::vector<double> alpha_, offset_;
};

}  // namespace moreau
