#pragma once

#include <cstdint>
#include <random>

#include "bisetforge/block_algebra.hpp"
#include "bisetforge/fixtures.hpp"
#include "bisetforge/matrix.hpp"
#include "bisetforge/rational.hpp"

namespace testing {

using namespace bisetforge;

inline const Fixtures& fixtures() {
  static const Fixtures fx = Fixtures::load(BISETFORGE_TEST_FIXTURE_DIR);
  return fx;
}

// Small seeded generators; every property test fixes its own seed.
struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

  Rational rational(long span = 9, long max_den = 4) {
    Rational q(integer(-span, span), integer(1, max_den));
    q.canonicalize();
    return q;
  }

  IntMatrix int_matrix(std::size_t r, std::size_t c, long span = 6) {
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = Integer(integer(-span, span));
    return m;
  }

  RatMatrix rat_matrix(std::size_t r, std::size_t c) {
    RatMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rational();
    return m;
  }

  RationalVector vector(std::size_t n, long span = 9, long max_den = 4) {
    RationalVector v(n);
    for (auto& x : v) x = rational(span, max_den);
    return v;
  }

  BlockElement block(long span = 9, long max_den = 4) {
    return BlockElement::from_lattice(vector(BlockElement::kDim, span, max_den));
  }
};

}  // namespace testing
