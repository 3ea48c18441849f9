#include <doctest.h>

#include "bisetforge/errors.hpp"
#include "bisetforge/linalg.hpp"
#include "bisetforge/orders.hpp"
#include "bisetforge/workbench.hpp"
#include "support.hpp"

using namespace bisetforge;
using testing::Gen;

namespace {

const Workbench& wb() {
  static const Workbench w(BISETFORGE_TEST_FIXTURE_DIR);
  return w;
}

BlockElement integer_block(Gen& g, long span) { return g.block(span, 1); }

}  // namespace

TEST_CASE("congruence list shape") {
  CHECK(lambda_congruences().size() == 15);
  CHECK(displayed_line_count() == 13);
  for (const auto& c : lambda_congruences()) CHECK(24 % c.modulus() == 0);
}

TEST_CASE("membership examples") {
  CHECK(lambda_membership(BlockElement::one()));
  BlockElement x = BlockElement::zero();
  x.x(0) = 1;
  CHECK_FALSE(lambda_membership(x));
  BlockElement half = BlockElement::one();
  half.u = Rational(1, 2);
  CHECK_THROWS_AS(lambda_membership(half), DomainError);
  Gen g(41);
  for (int i = 0; i < 200; ++i) CHECK(lambda_membership(Rational(24) * integer_block(g, 50)));
}

TEST_CASE("delta images lie in the order") {
  const auto& order = wb().order();
  const auto& r = order.ring();
  for (std::size_t i = 0; i < r.rank(); ++i) {
    BlockElement d = order.delta(r.basis(i));
    CHECK(d.is_integral());
    CHECK(lambda_membership(d));
    CHECK(localized_membership(d, 2));
    CHECK(localized_membership(d, 3));
    CHECK(order.delta_inv(d) == r.basis(i));
  }
  CHECK(order.delta(r.one()) == BlockElement::one());
}

TEST_CASE("local membership") {
  // 2-part holds (2w - 2z1 - z2 = 0, z2 = z3 = 4) but z2 is not 0 mod 3
  BlockElement a = BlockElement::zero();
  a.w = 2;
  a.z.b = 4;
  a.z.c = 4;
  CHECK(localized_membership(a, 2));
  CHECK_FALSE(localized_membership(a, 3));
  CHECK_FALSE(lambda_membership(a));
  // z2 = 3 alone breaks the 2-adic chain and satisfies z2 = 0 mod 3
  BlockElement b = BlockElement::zero();
  b.z.b = 3;
  CHECK_FALSE(localized_membership(b, 2));
  CHECK(localized_membership(b, 3));
  CHECK(localized_membership(BlockElement::one(), 2));
  CHECK(localized_membership(BlockElement::one(), 3));
  BlockElement third = BlockElement::one();
  third.y = Rational(1, 3);
  CHECK_THROWS_AS(localized_membership(third, 3), DomainError);
  CHECK_FALSE(localized_membership(third, 2));
  CHECK_THROWS_AS(localized_membership(a, 5), DomainError);
}

TEST_CASE("membership splits into local parts") {
  Gen g(42);
  for (int i = 0; i < 500; ++i) {
    BlockElement a = integer_block(g, 30);
    CHECK(lambda_membership(a) == (localized_membership(a, 2) && localized_membership(a, 3)));
  }
  CHECK(verify_localization_split(wb().order(), 7, 300).passed());
}

TEST_CASE("representation matrix") {
  const auto& order = wb().order();
  const RatMatrix& m = order.representation_matrix();
  REQUIRE(m.rows() == 22);
  REQUIRE(m.cols() == 22);
  CHECK(order.representation_is_integral());
  const long col0[22] = {0, 0, 0, -5, 6, -42, 0, 0, 0, 0, 252, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0};
  for (std::size_t r = 0; r < 22; ++r) CHECK(m(r, 0) == col0[r]);
  IntMatrix mi = order.integral_representation();
  CHECK(determinant(mi) == 10616832);
  // 24·M⁻¹ is integral
  RatMatrix inv = invert(m);
  bool integral = true;
  for (std::size_t r = 0; r < 22; ++r)
    for (std::size_t c = 0; c < 22; ++c) integral = integral && bisetforge::is_integral(Rational(24 * inv(r, c)));
  CHECK(integral);
}

TEST_CASE("printed M columns follow the untwisted basis order") {
  // the shipped matrix is transcribed as printed; its column j is δ(H_j)
  const auto& fx = testing::fixtures().matrix;
  const auto& order = wb().order();
  const auto& r = order.ring();
  CHECK(fx.M(0, 2) == 15);
  for (std::size_t j = 0; j < 22; ++j) {
    RationalVector col = order.delta(r.basis(j)).lattice_coordinates();
    for (std::size_t i = 0; i < 22; ++i) CHECK(fx.M(i, j) == col[i]);
  }
  // the errata list covers exactly the cells where the H~ reading differs
  const RatMatrix& m = order.representation_matrix();
  std::size_t differing = 0;
  for (std::size_t i = 0; i < 22; ++i)
    for (std::size_t j = 0; j < 22; ++j)
      if (Rational(fx.M(i, j)) != m(i, j)) {
        ++differing;
        CHECK(has_erratum(fx.errata, "M[" + std::to_string(i) + "][" + std::to_string(j) + "]", to_string(m(i, j))));
      }
  CHECK(differing == fx.errata.size());
}

TEST_CASE("congruence lattice equals the image of delta") {
  const auto& order = wb().order();
  IntMatrix lattice = congruence_lattice(displayed_system(), Integer(24));
  IntMatrix image = order.integral_representation();
  CHECK(column_hnf(lattice) == column_hnf(image));
  CHECK(lattice_index(image, IntMatrix::identity(22)) == Integer(10616832));
  // SNF route to the index: product of m / gcd(d_i, m)
  SmithForm s = smith_normal_form(displayed_system());
  Integer index = 1;
  auto d = s.divisors();
  for (std::size_t i = 0; i < d.size(); ++i) {
    Integer gcd;
    mpz_gcd(gcd.get_mpz_t(), d[i].get_mpz_t(), Integer(24).get_mpz_t());
    index *= Integer(24) / gcd;
  }
  CHECK(index == 10616832);
  CHECK(column_hnf(congruence_lattice(IntMatrix{{1, 1}}, Integer(2))) == column_hnf(IntMatrix{{1, 2}, {1, 0}}));
}

TEST_CASE("order is closed under products") {
  Gen g(43);
  const auto gens = wb().order().lattice_generators();
  for (int i = 0; i < 200; ++i) {
    BlockElement a = gens[g.integer(0, 21)], b = gens[g.integer(0, 21)];
    BlockElement c = Rational(g.integer(-3, 3)) * a + b;
    CHECK(lambda_membership(c * a));
    CHECK(lambda_membership(a * c * b));
  }
}

TEST_CASE("lambda and local stages") {
  CHECK(wb().run("lambda").passed());
  CHECK(wb().run("local2").passed());
  CHECK(wb().run("local3").passed());
}
