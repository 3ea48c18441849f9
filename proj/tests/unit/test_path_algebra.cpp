#include <doctest.h>

#include "bisetforge/errors.hpp"
#include "bisetforge/path_algebra.hpp"
#include "bisetforge/workbench.hpp"
#include "support.hpp"

using namespace bisetforge;

namespace {

const Workbench& wb() {
  static const Workbench w(BISETFORGE_TEST_FIXTURE_DIR);
  return w;
}

PathElement monomial(const Quiver& q, const std::string& word, Rational c = 1) { return {{parse_path(q, word), c}}; }

Quiver loop() { return Quiver({"v"}, {{"a", "v", "v"}}); }

Quiver two_cycle() { return Quiver({"1", "2"}, {{"a", "1", "2"}, {"b", "2", "1"}}); }

}  // namespace

TEST_CASE("quiver paths") {
  Quiver q = two_cycle();
  Path a = parse_path(q, "a"), b = parse_path(q, "b");
  auto ab = compose(q, a, b);
  REQUIRE(ab.has_value());
  CHECK(ab->source == q.vertex_index("1"));
  CHECK(ab->target == q.vertex_index("1"));
  CHECK(path_to_string(q, *ab) == "a b");
  CHECK_FALSE(compose(q, a, a).has_value());
  CHECK(path_to_string(q, parse_path(q, "2")) == "2");
  CHECK(Path::vertex(0) < a);
  CHECK(a < *ab);
  CHECK_THROWS_AS(parse_path(q, "a a"), DomainError);
  CHECK_THROWS_AS(Quiver({"1"}, {{"a", "1", "3"}}), DomainError);
}

TEST_CASE("rewriting: nilpotent loop") {
  Quiver q = loop();
  QuotientBasis qb = quotient_basis(q, {monomial(q, "a a a")}, Ring::Q);
  CHECK(qb.confluent);
  CHECK(qb.rank == 3);
  RewritingSystem rs(q, {monomial(q, "a a a")}, Ring::Q);
  CHECK(rs.reduce(monomial(q, "a a a a")).empty());
}

TEST_CASE("rewriting: free loop does not terminate") {
  Quiver q = loop();
  RewritingSystem rs(q, {}, Ring::Q, 6);
  CHECK_THROWS_AS(rs.normal_forms(), NonTerminationError);
  CHECK_THROWS_AS(quotient_basis(q, {}, Ring::Q, 6), NonTerminationError);
}

TEST_CASE("rewriting: non-monomial relation and confluence") {
  Quiver q = loop();
  // a² = 2a: basis e, a
  PathElement rel = monomial(q, "a a");
  rel[parse_path(q, "a")] = -2;
  QuotientBasis qb = quotient_basis(q, {rel}, Ring::Z2);
  CHECK(qb.confluent);
  CHECK(qb.rank == 2);
  RewritingSystem rs(q, {rel}, Ring::Z2);
  PathElement a3 = rs.reduce(monomial(q, "a a a"));
  CHECK(a3 == PathElement{{parse_path(q, "a"), 4}});
  // head 2·a² is not invertible in Z_(2)
  PathElement bad = monomial(q, "a a", 2);
  CHECK_THROWS_AS(RewritingSystem(q, {bad}, Ring::Z2), DomainError);
  CHECK_NOTHROW(RewritingSystem(q, {bad}, Ring::Z3));
  // ambiguity a b a with ab = a, ba = b does not resolve to a common form here
  Quiver r = Quiver({"v"}, {{"a", "v", "v"}, {"b", "v", "v"}});
  PathElement ab = monomial(r, "a b");
  ab[parse_path(r, "b")] = 1;
  PathElement ba = monomial(r, "b a");
  ba[parse_path(r, "a")] = -1;
  RewritingSystem nc(r, {ab, ba, monomial(r, "a a"), monomial(r, "b b")}, Ring::Q);
  CHECK_FALSE(nc.confluent());
}

TEST_CASE("mixed endpoints in one relation are rejected") {
  Quiver q = two_cycle();
  RelationSpec spec{{Rational(1), {"a", "b"}}, {Rational(1), {"b", "a"}}};
  CHECK_THROWS_AS(path_element(q, spec, Ring::Q), DomainError);
}

TEST_CASE("shipped presentations have rank 10") {
  for (const char* name : {"a_prime", "local2", "local3"}) {
    CAPTURE(name);
    Presentation p = wb().presentation(name);
    QuotientBasis qb = quotient_basis(p.quiver, p.relations, p.ring);
    CHECK(qb.confluent);
    CHECK(qb.rank == 10);
    std::vector<std::string> got;
    for (const auto& path : qb.paths) got.push_back(path_to_string(p.quiver, path));
    auto want = p.normal_forms;
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    CHECK(got == want);
  }
}

TEST_CASE("mod-p reductions") {
  Presentation p2 = reduce_mod_p(wb().presentation("local2"), 2);
  CHECK(p2.ring == Ring::F2);
  REQUIRE(p2.relations.size() == 9);
  // τ7² − 2τ7 − τ1τ2 becomes τ7² − τ1τ2 (that is, τ7² + τ1τ2 over F2)
  const auto& q = p2.quiver;
  PathElement last = p2.relations.back();
  CHECK(last.size() == 2);
  CHECK(last.count(parse_path(q, "tau7 tau7")) == 1);
  CHECK(last.count(parse_path(q, "tau1 tau2")) == 1);
  CHECK(quotient_basis(q, p2.relations, Ring::F2).rank == 10);
  Presentation p3 = reduce_mod_p(wb().presentation("local3"), 3);
  CHECK(p3.relations == wb().presentation("local3").relations);
  CHECK(quotient_basis(p3.quiver, p3.relations, Ring::F3).rank == 10);
}

TEST_CASE("corner algebras") {
  CornerAlgebra a = wb().corner_a();
  CHECK(a.rank() == 10);
  // a_{4,2}·a_{2,4} = a''_{4,4} − 12a'_{4,4}
  RationalVector prod = a.multiply(a.basis_vector(a.index_of("a_{4,2}")), a.basis_vector(a.index_of("a_{2,4}")));
  RationalVector want = a.add(a.basis_vector(a.index_of("a''_{4,4}")),
                              a.scale(-12, a.basis_vector(a.index_of("a'_{4,4}"))));
  CHECK(prod == want);
  RationalVector p41 = a.multiply(a.basis_vector(a.index_of("a_{4,1}")), a.basis_vector(a.index_of("a_{1,4}")));
  CHECK(p41 == a.basis_vector(a.index_of("a'_{4,4}")));

  CornerAlgebra l2 = wb().corner_local(2);
  CHECK(l2.rank() == 10);
  const auto t2 = l2.basis_vector(l2.index_of("tau2")), t7 = l2.basis_vector(l2.index_of("tau7"));
  CHECK(l2.multiply(t2, t7) == l2.scale(2, t2));
  const auto t1 = l2.basis_vector(l2.index_of("tau1"));
  CHECK(l2.multiply(t7, t7) == l2.add(l2.scale(2, t7), l2.multiply(t1, t2)));

  CornerAlgebra l3 = wb().corner_local(3);
  CHECK(l3.rank() == 10);
  CHECK(l3.multiply(l3.basis_vector(l3.index_of("tau1")), l3.basis_vector(l3.index_of("tau2"))) ==
        l3.basis_vector(l3.index_of("tau5")));

  CHECK_THROWS_AS(l2.reduce_mod_p(3), DomainError);
  CHECK(l2.reduce_mod_p(2).ring == Ring::F2);
}

TEST_CASE("corner input validation") {
  const auto gens = wb().order().lattice_generators();
  BlockElement two = Rational(2) * BlockElement::one();
  CHECK_THROWS_AS(corner(gens, Ring::Z2, {{"x", two}}), DomainError);
  BlockElement e11;
  e11.s(0, 0) = 1;
  CHECK_THROWS_AS(corner(gens, Ring::Z2, {{"a", e11}, {"b", e11}}), DomainError);
  CornerAlgebra echelon = corner(gens, Ring::Q, {{"one", BlockElement::one()}});
  CHECK(echelon.rank() == 22);
  CHECK(echelon.labels.front() == "c1");
}

TEST_CASE("presentations verify and dropping a relation is caught") {
  struct Case {
    const char* name;
    CornerAlgebra c;
  };
  std::vector<Case> cases{{"a_prime", wb().corner_a()}, {"local2", wb().corner_local(2)}, {"local3", wb().corner_local(3)}};
  for (const auto& [name, c] : cases) {
    CAPTURE(name);
    Presentation p = wb().presentation(name);
    Report rep = verify_presentation(c, p);
    CHECK(rep.passed());
    for (std::size_t drop = 0; drop < p.relations.size(); ++drop) {
      Presentation weaker = p;
      weaker.relations.erase(weaker.relations.begin() + drop);
      Report w = verify_presentation(c, weaker);
      CHECK(w.find("relations")->passed);
      CHECK_FALSE(w.find("rank")->passed);
    }
  }
}

TEST_CASE("paths stage") { CHECK(wb().run("paths").passed()); }
