#include "bisetforge/linalg.hpp"

#include <sstream>

namespace bisetforge {

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = Rational(m(r, c));
  return out;
}

IntMatrix to_integer(const RatMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m(r, c).get_den() != 1) {
        throw DomainError("entry (" + std::to_string(r) + "," + std::to_string(c) + ") = " +
                          m(r, c).get_str() + " is not integral");
      }
      out(r, c) = m(r, c).get_num();
    }
  return out;
}

bool is_integral(const RatMatrix& m) {
  for (const auto& x : m.data())
    if (x.get_den() != 1) return false;
  return true;
}

namespace {
template <typename T>
std::string matrix_string(const Matrix<T>& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ",[" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? "," : "") << m(r, c).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && a(p, col) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(p, row);
    Rational inv = 1 / a(row, col);
    for (std::size_t c = col; c < a.cols(); ++c) a(row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col) == 0) continue;
      Rational f = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) a(r, c) -= f * a(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

// Floor division for the remainder step of HNF and SNF.
Integer fdiv(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

void row_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& f) {
  if (f == 0) return;
  for (std::size_t c = 0; c < m.cols(); ++c) m(dst, c) += f * m(src, c);
}
void col_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& f) {
  if (f == 0) return;
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, dst) += f * m(r, src);
}
void row_negate(IntMatrix& m, std::size_t r) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = -m(r, c);
}
}  // namespace

std::string to_string(const IntMatrix& m) { return matrix_string(m); }
std::string to_string(const RatMatrix& m) { return matrix_string(m); }

RatMatrix invert(const RatMatrix& m) {
  if (!m.is_square()) throw DomainError("cannot invert a non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw SingularMatrixError("matrix is singular");
  RatMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  return inv;
}

Integer determinant(const IntMatrix& m) {
  if (!m.is_square()) throw DomainError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(p, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = t;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Rational determinant(const RatMatrix& m) {
  if (!m.is_square()) throw DomainError("determinant of a non-square matrix");
  RatMatrix a = m;
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      a.swap_rows(p, k);
      det = -det;
    }
    det *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Rational f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

std::size_t rank(const RatMatrix& m) {
  RatMatrix a = m;
  return rref(a).size();
}

std::optional<RationalVector> solve(const RatMatrix& m, const RationalVector& b) {
  if (b.size() != m.rows()) throw DomainError("right-hand side length mismatch");
  RatMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  RationalVector x = zero_vector(m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, m.cols());
  return x;
}

std::vector<RationalVector> kernel(const RatMatrix& m) {
  RatMatrix a = m;
  auto pivots = rref(a);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector v = zero_vector(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

IntMatrix row_hnf(const IntMatrix& m) {
  IntMatrix a = m;
  std::size_t row = 0;
  std::vector<std::size_t> pivot_cols;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    // Euclid on the column below `row` until a single nonzero entry remains.
    while (true) {
      std::size_t best = a.rows();
      for (std::size_t r = row; r < a.rows(); ++r) {
        if (a(r, col) != 0 && (best == a.rows() || abs(a(r, col)) < abs(a(best, col)))) best = r;
      }
      if (best == a.rows()) break;
      a.swap_rows(best, row);
      bool done = true;
      for (std::size_t r = row + 1; r < a.rows(); ++r) {
        if (a(r, col) == 0) continue;
        row_axpy(a, r, row, -fdiv(a(r, col), a(row, col)));
        if (a(r, col) != 0) done = false;
      }
      if (done) break;
    }
    if (a(row, col) == 0) continue;
    if (a(row, col) < 0) row_negate(a, row);
    for (std::size_t r = 0; r < row; ++r) row_axpy(a, r, row, -fdiv(a(r, col), a(row, col)));
    pivot_cols.push_back(col);
    ++row;
  }
  IntMatrix out(row, a.cols());
  for (std::size_t r = 0; r < row; ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
  return out;
}

IntMatrix column_hnf(const IntMatrix& m) { return row_hnf(m.transpose()).transpose(); }

std::vector<Integer> SmithForm::divisors() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i)
    if (D(i, i) != 0) out.push_back(D(i, i));
  return out;
}

SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  SmithForm f{IntMatrix::identity(rows), m, IntMatrix::identity(cols)};
  IntMatrix& D = f.D;
  IntMatrix& U = f.U;
  IntMatrix& V = f.V;
  const std::size_t n = std::min(rows, cols);
  for (std::size_t t = 0; t < n; ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pr = rows, pc = cols;
      for (std::size_t r = t; r < rows; ++r)
        for (std::size_t c = t; c < cols; ++c)
          if (D(r, c) != 0 && (pr == rows || abs(D(r, c)) < abs(D(pr, pc)))) {
            pr = r;
            pc = c;
          }
      if (pr == rows) return f;
      D.swap_rows(t, pr);
      U.swap_rows(t, pr);
      D.swap_cols(t, pc);
      V.swap_cols(t, pc);

      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (D(r, t) == 0) continue;
        Integer q = fdiv(D(r, t), D(t, t));
        row_axpy(D, r, t, -q);
        row_axpy(U, r, t, -q);
        if (D(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (D(t, c) == 0) continue;
        Integer q = fdiv(D(t, c), D(t, t));
        col_axpy(D, c, t, -q);
        col_axpy(V, c, t, -q);
        if (D(t, c) != 0) clean = false;
      }
      if (!clean) continue;

      // Enforce d_t | every remaining entry by folding an offending row in.
      std::size_t bad = rows;
      for (std::size_t r = t + 1; r < rows && bad == rows; ++r)
        for (std::size_t c = t + 1; c < cols; ++c)
          if (D(r, c) % D(t, t) != 0) {
            bad = r;
            break;
          }
      if (bad == rows) break;
      row_axpy(D, t, bad, Integer(1));
      row_axpy(U, t, bad, Integer(1));
    }
    if (D(t, t) < 0) {
      row_negate(D, t);
      row_negate(U, t);
    }
  }
  return f;
}

std::optional<IntVector> solve_integral(const IntMatrix& m, const IntVector& b) {
  if (b.size() != m.rows()) throw DomainError("right-hand side length mismatch");
  SmithForm f = smith_normal_form(m);
  IntVector c = f.U * b;
  IntVector y(m.cols(), Integer(0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer d = i < m.cols() ? f.D(i, i) : Integer(0);
    if (d == 0) {
      if (c[i] != 0) return std::nullopt;
      continue;
    }
    if (c[i] % d != 0) return std::nullopt;
    y[i] = c[i] / d;
  }
  return f.V * y;
}

bool lattice_contains(const IntMatrix& amb, const IntMatrix& sub) {
  if (amb.rows() != sub.rows()) throw DomainError("lattices live in different ambient dimensions");
  SmithForm f = smith_normal_form(amb);
  for (std::size_t j = 0; j < sub.cols(); ++j) {
    IntVector c = f.U * sub.col(j);
    for (std::size_t i = 0; i < amb.rows(); ++i) {
      Integer d = i < amb.cols() ? f.D(i, i) : Integer(0);
      if (d == 0 ? c[i] != 0 : c[i] % d != 0) return false;
    }
  }
  return true;
}

std::optional<Integer> lattice_index(const IntMatrix& sub, const IntMatrix& amb) {
  if (!lattice_contains(amb, sub)) throw DomainError("lattice_index: first lattice is not contained in the second");
  IntMatrix basis = column_hnf(amb);
  if (basis.cols() == 0) return Integer(1);
  // Coordinates of the sublattice generators in the ambient basis.
  IntMatrix coords(basis.cols(), sub.cols());
  for (std::size_t j = 0; j < sub.cols(); ++j) {
    auto x = solve_integral(basis, sub.col(j));
    if (!x) throw InternalError("lattice_index: containment check and solver disagree");
    coords.set_col(j, *x);
  }
  auto divs = smith_normal_form(coords).divisors();
  if (divs.size() < basis.cols()) return std::nullopt;
  Integer index = 1;
  for (const auto& d : divs) index *= d;
  return index;
}

bool local_span_contains(const IntMatrix& gens, const IntVector& v, unsigned long p) {
  if (gens.rows() != v.size()) throw DomainError("dimension mismatch in span test");
  if (gens.cols() == 0) {
    for (const auto& x : v)
      if (x != 0) return false;
    return true;
  }
  SmithForm f = smith_normal_form(gens);
  IntVector c = f.U * v;
  for (std::size_t i = 0; i < gens.rows(); ++i) {
    Integer d = i < gens.cols() ? f.D(i, i) : Integer(0);
    if (d == 0) {
      if (c[i] != 0) return false;
    } else if (p == 0) {
      if (c[i] % d != 0) return false;
    } else if (c[i] != 0 && p_valuation(Rational(c[i]), p) < p_valuation(Rational(d), p)) {
      return false;
    }
  }
  return true;
}

Integer common_denominator(const std::vector<RationalVector>& vs) {
  Integer den = 1;
  for (const auto& v : vs)
    for (const auto& x : v) den = lcm(den, x.get_den());
  return den;
}

namespace {
IntVector scaled_integral(const RationalVector& v, const Integer& den) {
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rational q = v[i] * den;
    if (q.get_den() != 1) throw InternalError("denominator clearing failed");
    out[i] = q.get_num();
  }
  return out;
}
}  // namespace

bool local_span_contains(const std::vector<RationalVector>& gens, const RationalVector& v, unsigned long p) {
  std::vector<RationalVector> all = gens;
  all.push_back(v);
  const Integer den = common_denominator(all);
  IntMatrix g(v.size(), gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j) g.set_col(j, scaled_integral(gens[j], den));
  return local_span_contains(g, scaled_integral(v, den), p);
}

bool same_local_span(const std::vector<RationalVector>& a, const std::vector<RationalVector>& b, unsigned long p) {
  for (const auto& v : b)
    if (!local_span_contains(a, v, p)) return false;
  for (const auto& v : a)
    if (!local_span_contains(b, v, p)) return false;
  return true;
}

}  // namespace bisetforge
