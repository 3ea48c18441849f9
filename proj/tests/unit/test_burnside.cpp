#include <doctest.h>

#include "bisetforge/biset.hpp"
#include "bisetforge/burnside_ring.hpp"
#include "bisetforge/errors.hpp"
#include "support.hpp"

using namespace bisetforge;
using testing::Gen;

namespace {

const BurnsideRing& R() { return BurnsideRing::s3(); }

BurnsideElement named(const std::string& name) {
  return R().make(testing::fixtures().peirce.idempotent(name), Ring::Q);
}

BurnsideElement random_element(Gen& g) { return R().make(g.vector(R().rank(), 5, 3), Ring::Q); }

}  // namespace

TEST_CASE("transitive biset sizes") {
  auto ctx = BisetContext::s3();
  auto& r = R();
  CHECK(basis_biset(ctx, r.context().index_of_label("H^Delta_5")).size() == 6);
  CHECK(basis_biset(ctx, r.context().index_of_label("H_{0,0}")).size() == 36);
  CHECK(basis_biset(ctx, r.context().index_of_label("H_{5,5}")).size() == 1);
  for (std::size_t i = 0; i < r.rank(); ++i) CHECK(basis_biset(ctx, i).is_valid_action());
}

TEST_CASE("tensor and decomposition") {
  auto ctx = BisetContext::s3();
  const std::size_t free_i = R().context().index_of_label("H_{0,0}");
  const std::size_t diag = R().context().index_of_label("H^Delta_5");
  Biset regular = basis_biset(ctx, diag);
  auto d = decompose(regular);
  for (std::size_t k = 0; k < d.size(); ++k) CHECK(d[k] == (k == diag ? 1 : 0));

  Biset free = basis_biset(ctx, free_i);
  CHECK(decompose(free)[free_i] == 1);
  Biset ff = tensor(free, free);
  CHECK(ff.size() == 216);
  auto dd = decompose(ff);
  for (std::size_t k = 0; k < dd.size(); ++k) CHECK(dd[k] == (k == free_i ? 6 : 0));
}

TEST_CASE("structure constants: identity and oracles") {
  auto& r = R();
  CHECK(r.context().identity_class() == r.context().index_of_label("H^Delta_5"));
  CHECK(r.table() == r.double_coset_table());
  for (std::size_t j = 0; j < r.rank(); ++j) {
    CHECK(r.multiply(r.one(), r.basis(j)) == r.basis(j));
    CHECK(r.multiply(r.basis(j), r.one()) == r.basis(j));
  }
  const auto h00 = r.basis(r.context().index_of_label("H_{0,0}"));
  CHECK(r.multiply(h00, h00) == r.scale(6, h00));
  // third route: tensor the bisets directly for a spread of pairs
  auto ctx = BisetContext::s3();
  Gen g(21);
  for (int trial = 0; trial < 25; ++trial) {
    std::size_t i = g.integer(0, 21), j = g.integer(0, 21);
    auto d = decompose(tensor(basis_biset(ctx, i), basis_biset(ctx, j)));
    for (std::size_t k = 0; k < r.rank(); ++k) CHECK(d[k] == r.table()(i, j, k));
  }
}

TEST_CASE("ring axioms report") {
  Report rep = verify_ring_axioms(R());
  CHECK(rep.passed());
  CHECK(rep.find("associative") != nullptr);
}

TEST_CASE("associativity and distributivity on random rational elements") {
  Gen g(22);
  auto& r = R();
  for (int trial = 0; trial < 20; ++trial) {
    auto a = random_element(g), b = random_element(g), c = random_element(g);
    CHECK(r.multiply(r.multiply(a, b), c) == r.multiply(a, r.multiply(b, c)));
    CHECK(r.multiply(a, r.add(b, c)) == r.add(r.multiply(a, b), r.multiply(a, c)));
  }
}

TEST_CASE("Peirce idempotents") {
  auto& r = R();
  auto e = named("e");
  CHECK(e == r.parse("H_{0,0}:-1/2,H_{1,0}:1,H_{4,0}:1/2", Ring::Q));
  CHECK(r.multiply(e, e) == e);
  CHECK(r.multiply(named("eps2"), named("eps4")).coeffs == r.zero().coeffs);
  const char* names[] = {"e", "g", "h", "eps2", "eps3", "eps4"};
  BurnsideElement sum = r.zero();
  for (const char* a : names) {
    sum = r.add(sum, named(a));
    for (const char* b : names) {
      auto p = r.multiply(named(a), named(b));
      CHECK(p == (std::string(a) == b ? named(a) : r.zero()));
    }
  }
  CHECK(sum == r.one());
  auto eps3 = named("eps3");
  for (std::size_t j = 0; j < r.rank(); ++j) CHECK(r.multiply(eps3, r.basis(j)) == r.multiply(r.basis(j), eps3));
}

TEST_CASE("rings and parsing") {
  auto& r = R();
  auto h6 = r.basis(r.context().index_of_label("H_6"), Ring::F2);
  CHECK(r.multiply(r.one(Ring::F2), h6) == h6);
  // 6·H_{0,0} vanishes mod 2 and mod 3
  auto h00 = r.basis(0, Ring::F3);
  CHECK(is_zero(r.multiply(h00, h00).coeffs));
  CHECK_THROWS_AS(r.parse("H_{0,0}:1/2", Ring::Z), DomainError);
  CHECK_THROWS_AS(r.multiply(r.one(Ring::Q), r.one(Ring::Z)), DomainError);
  CHECK_THROWS(r.parse("H_{9,9}:1", Ring::Q));
  CHECK(r.format(r.parse("U_{0,0}:2", Ring::Z)) == "H_{0,0}:2");
  CHECK(r.change_ring(r.scale(3, r.one(Ring::Z)), Ring::F3).coeffs == r.zero(Ring::F3).coeffs);
}
