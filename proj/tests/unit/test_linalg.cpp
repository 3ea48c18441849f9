#include <doctest.h>

#include "bisetforge/errors.hpp"
#include "bisetforge/linalg.hpp"
#include "support.hpp"

using namespace bisetforge;
using testing::Gen;

namespace {

Integer abs_det(const IntMatrix& m) {
  Integer d = determinant(m);
  return d < 0 ? Integer(-d) : d;
}

bool is_hnf_rows(const IntMatrix& h) {
  std::size_t lead = 0;
  for (std::size_t r = 0; r < h.rows(); ++r) {
    std::size_t c = 0;
    while (c < h.cols() && h(r, c) == 0) ++c;
    if (c == h.cols()) {
      for (std::size_t rr = r; rr < h.rows(); ++rr)
        for (std::size_t cc = 0; cc < h.cols(); ++cc)
          if (h(rr, cc) != 0) return false;
      return true;
    }
    if (r > 0 && c < lead) return false;
    if (h(r, c) <= 0) return false;
    for (std::size_t above = 0; above < r; ++above)
      if (h(above, c) < 0 || h(above, c) >= h(r, c)) return false;
    lead = c + 1;
  }
  return true;
}

}  // namespace

TEST_CASE("rational rings") {
  CHECK(parse_ring("Z_(2)") == Ring::Z2);
  CHECK(normalize(Rational(-1), Ring::F3) == 2);
  CHECK(normalize(Rational(1, 2), Ring::F3) == 2);
  CHECK_THROWS_AS(normalize(Rational(1, 2), Ring::Z), DomainError);
  CHECK_THROWS_AS(normalize(Rational(1, 3), Ring::F3), DomainError);
  CHECK(belongs_to(Rational(1, 3), Ring::Z2));
  CHECK_FALSE(belongs_to(Rational(1, 2), Ring::Z2));
  CHECK(is_unit(Rational(3), Ring::Z2));
  CHECK_FALSE(is_unit(Rational(2), Ring::Z2));
  CHECK(p_valuation(Rational(24), 2) == 3);
  CHECK(p_valuation(Rational(5, 9), 3) == -2);
  CHECK(parse_rational("-1/12") == Rational(-1, 12));
  CHECK(parse_rational("+4/2") == 2);
  CHECK_THROWS(parse_rational("1/0"));
  CHECK(to_string(parse_rational("-6/4")) == "-3/2");
}

TEST_CASE("inverse of a 2x2 and singular input") {
  RatMatrix m{{1, 2}, {3, 4}};
  RatMatrix inv = invert(m);
  CHECK(inv == RatMatrix{{-2, 1}, {Rational(3, 2), Rational(-1, 2)}});
  CHECK(invert(RatMatrix::identity(5)) == RatMatrix::identity(5));
  CHECK_THROWS_AS(invert(RatMatrix{{1, 2}, {2, 4}}), SingularMatrixError);
}

TEST_CASE("inverse property on seeded matrices") {
  Gen g(11);
  int inverted = 0;
  for (int trial = 0; trial < 40; ++trial) {
    RatMatrix m = g.rat_matrix(5, 5);
    if (rank(m) < 5) {
      CHECK_THROWS_AS(invert(m), SingularMatrixError);
      continue;
    }
    RatMatrix inv = invert(m);
    CHECK(m * inv == RatMatrix::identity(5));
    CHECK(inv * m == RatMatrix::identity(5));
    CHECK(determinant(m) * determinant(inv) == 1);
    ++inverted;
  }
  CHECK(inverted > 30);
}

TEST_CASE("Smith form examples") {
  SmithForm s = smith_normal_form(IntMatrix{{2, 0}, {0, 3}});
  CHECK(s.D == IntMatrix{{1, 0}, {0, 6}});
  SmithForm z = smith_normal_form(IntMatrix(3, 2));
  CHECK(z.D.is_zero());
  CHECK(z.divisors().empty());
}

TEST_CASE("Smith form properties on seeded matrices") {
  Gen g(12);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = g.integer(1, 5), c = g.integer(1, 5);
    IntMatrix m = g.int_matrix(r, c);
    SmithForm s = smith_normal_form(m);
    CHECK(s.U * m * s.V == s.D);
    CHECK(abs_det(s.U) == 1);
    CHECK(abs_det(s.V) == 1);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (i != j) CHECK(s.D(i, j) == 0);
    auto d = s.divisors();
    for (std::size_t i = 0; i + 1 < d.size(); ++i) CHECK(d[i + 1] % d[i] == 0);
    CHECK(d.size() == rank(to_rational(m)));
    if (r == c && d.size() == r) {
      Integer prod = 1;
      for (const auto& x : d) prod *= x;
      CHECK(prod == abs_det(m));
    }
  }
}

TEST_CASE("Hermite forms span the same lattice") {
  Gen g(13);
  for (int trial = 0; trial < 60; ++trial) {
    IntMatrix m = g.int_matrix(g.integer(1, 5), g.integer(1, 5));
    IntMatrix h = row_hnf(m);
    CHECK(is_hnf_rows(h));
    CHECK(row_hnf(h) == h);
    // rows of h and of m generate the same lattice
    CHECK(lattice_contains(h.transpose(), m.transpose()));
    CHECK(lattice_contains(m.transpose(), h.transpose()));
    IntMatrix ch = column_hnf(m);
    CHECK(column_hnf(ch) == ch);
    CHECK(lattice_contains(ch, m));
    CHECK(lattice_contains(m, ch));
  }
}

TEST_CASE("lattice index") {
  CHECK(lattice_index(IntMatrix{{2, 0}, {0, 2}}, IntMatrix::identity(2)) == Integer(4));
  CHECK(lattice_index(IntMatrix::identity(2), IntMatrix::identity(2)) == Integer(1));
  CHECK_THROWS_AS(lattice_index(IntMatrix::identity(2), IntMatrix{{2, 0}, {0, 2}}), DomainError);
  CHECK_FALSE(lattice_index(IntMatrix{{1}, {0}}, IntMatrix::identity(2)).has_value());
  Gen g(14);
  for (int trial = 0; trial < 30; ++trial) {
    IntMatrix m = g.int_matrix(4, 4, 5);
    if (determinant(m) == 0) continue;
    CHECK(lattice_index(m, IntMatrix::identity(4)) == abs_det(m));
  }
}

TEST_CASE("integral solve and kernel") {
  IntMatrix m{{2, 0}, {0, 3}};
  CHECK(solve_integral(m, IntVector{Integer(4), Integer(9)}) == IntVector{Integer(2), Integer(3)});
  CHECK_FALSE(solve_integral(m, IntVector{Integer(1), Integer(0)}).has_value());
  RatMatrix k{{1, 2, 3}, {2, 4, 6}};
  auto ker = kernel(k);
  CHECK(ker.size() == 2);
  for (const auto& v : ker) CHECK(is_zero(k * v));
}

TEST_CASE("local spans") {
  // span of (2) in Z_(3) contains 1, in Z_(2) it does not.
  IntMatrix two{{2}};
  CHECK(local_span_contains(two, IntVector{Integer(1)}, 3));
  CHECK_FALSE(local_span_contains(two, IntVector{Integer(1)}, 2));
  CHECK_FALSE(local_span_contains(two, IntVector{Integer(1)}, 0));
  std::vector<RationalVector> a{{Rational(3), Rational(0)}, {Rational(0), Rational(1)}};
  std::vector<RationalVector> e{{Rational(1), Rational(0)}, {Rational(0), Rational(1)}};
  CHECK(same_local_span(a, e, 2));
  CHECK_FALSE(same_local_span(a, e, 3));
  CHECK(common_denominator({{Rational(1, 4), Rational(1, 6)}}) == 12);
}
