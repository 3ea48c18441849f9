#include <doctest.h>

#include "bisetforge/block_algebra.hpp"
#include "bisetforge/errors.hpp"
#include "bisetforge/peirce.hpp"
#include "support.hpp"

using namespace bisetforge;
using testing::Gen;

TEST_CASE("dual numbers") {
  CHECK(DualPair{0, 1, 0} * DualPair{0, 1, 0} == DualPair{0, 0, 0});
  DualPair p{3, Rational(1, 2), -4};
  CHECK(DualPair::constant(1) * p == p);
  CHECK(DualPair{2, 4, 0} * DualPair{2, 4, 0} == DualPair{4, 16, 0});
  CHECK(inverse(p) * p == DualPair::constant(1));
  CHECK_THROWS_AS(inverse(DualPair{0, 1, 1}), DomainError);
  CHECK(is_unit(DualPair{3, 2, 2}, Ring::Z2));
  CHECK_FALSE(is_unit(DualPair{3, 2, 2}, Ring::Z3));
}

TEST_CASE("twisted corner products") {
  BlockElement a, b;
  a.x(0) = 1;
  b.t(0) = 1;
  CHECK((a * b).z == DualPair{0, 1, 0});
  BlockElement c, d;
  c.y = 1;
  d.v = 1;
  CHECK((c * d).z == DualPair{0, -12, 1});
  // A_{1,4}·A_{4,1} = 0
  CHECK((b * a).is_zero());
  CHECK((d * c).is_zero());
}

TEST_CASE("block algebra is associative and unital") {
  Gen g(31);
  const BlockElement one = BlockElement::one();
  for (int trial = 0; trial < 200; ++trial) {
    BlockElement a = g.block(), b = g.block(), c = g.block();
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(one * a == a);
    CHECK(a * one == a);
  }
}

TEST_CASE("coordinates round trip") {
  Gen g(32);
  for (int trial = 0; trial < 50; ++trial) {
    BlockElement a = g.block();
    CHECK(BlockElement::from_lattice(a.lattice_coordinates()) == a);
    CHECK(BlockElement::from_peirce(a.peirce_coordinates()) == a);
    CHECK(BlockElement::from_json(a.to_json()) == a);
  }
  BlockElement u = BlockElement::lattice_unit(9);
  CHECK(u.x(0) == 1);
  CHECK(BlockElement::lattice_names()[9] == "x1");
  CHECK_THROWS(BlockElement().at("q7"));
}

TEST_CASE("inverses") {
  Gen g(33);
  int found = 0;
  for (int trial = 0; trial < 40; ++trial) {
    BlockElement a = g.block();
    try {
      BlockElement inv = a.inverse();
      CHECK(a * inv == BlockElement::one());
      CHECK(inv * a == BlockElement::one());
      ++found;
    } catch (const SingularMatrixError&) {
    }
  }
  CHECK(found > 30);
  BlockElement nil;
  nil.x(0) = 1;
  CHECK_THROWS_AS(nil.inverse(), SingularMatrixError);
}

TEST_CASE("gamma") {
  const auto& fx = testing::fixtures();
  const auto& ring = BurnsideRing::s3();
  Gamma gamma(ring, fx.peirce);
  CHECK(gamma.gamma(BlockElement::one()) == ring.one());
  BlockElement e11;
  e11.s(0, 0) = 1;
  CHECK(gamma.gamma(e11) == ring.make(fx.peirce.idempotent("e"), Ring::Q));
  BlockElement eta;
  eta.z = DualPair{0, 1, 0};
  CHECK(gamma.gamma(eta).coeffs == fx.peirce.basis22[fx.peirce.index_of("b'_{eps4,eps4}")]);

  Gen g(34);
  for (int trial = 0; trial < 30; ++trial) {
    BlockElement a = g.block(4, 3), b = g.block(4, 3);
    CHECK(gamma.gamma(a * b) == ring.multiply(gamma.gamma(a), gamma.gamma(b)));
    CHECK(gamma.gamma_inv(gamma.gamma(a)) == a);
  }
  CHECK(verify_gamma_morphism(ring, gamma).passed());
  CHECK(verify_peirce(ring, fx.peirce, gamma).passed());
}
