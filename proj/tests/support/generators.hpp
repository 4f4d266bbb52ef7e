#pragma once

// Seeded random generators for property-style tests.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "mtc/cyclotomic.hpp"

namespace mtc::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }

  Rational rational(std::int64_t span = 9, std::int64_t max_den = 6) {
    return Rational(Integer(integer(-span, span)), Integer(integer(1, max_den)));
  }

  /// Sparse random element of ℚ(ζ_order) written as a sum of a few terms.
  Cyclotomic cyclotomic(std::uint32_t order, int terms = 4) {
    std::vector<std::pair<std::int64_t, Rational>> t;
    for (int i = 0; i < terms; ++i) t.emplace_back(integer(0, order - 1), rational());
    return Cyclotomic::from_terms(order, t);
  }

  Cyclotomic nonzero_cyclotomic(std::uint32_t order, int terms = 4) {
    for (;;) {
      auto x = cyclotomic(order, terms);
      if (!x.is_zero()) return x;
    }
  }

  std::uint32_t order(std::uint32_t max = 100) { return static_cast<std::uint32_t>(integer(1, max)); }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace mtc::testing
