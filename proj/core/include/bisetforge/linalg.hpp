#pragma once

#include <optional>

#include "bisetforge/matrix.hpp"

namespace bisetforge {

/// Exact inverse by Gauss-Jordan. Throws SingularMatrixError.
RatMatrix invert(const RatMatrix& m);
/// Fraction-free Bareiss elimination.
Integer determinant(const IntMatrix& m);
Rational determinant(const RatMatrix& m);
std::size_t rank(const RatMatrix& m);

/// Some solution x of m·x = b, or nullopt when the system is inconsistent.
std::optional<RationalVector> solve(const RatMatrix& m, const RationalVector& b);
/// Basis of the right kernel.
std::vector<RationalVector> kernel(const RatMatrix& m);

/// Row-style Hermite normal form: H = U·M upper echelon with positive pivots,
/// entries above each pivot reduced into [0, pivot). Zero rows are dropped, so
/// the result is a canonical basis of the row lattice.
IntMatrix row_hnf(const IntMatrix& m);
/// Canonical basis (as columns) of the lattice spanned by the columns of m.
IntMatrix column_hnf(const IntMatrix& m);

struct SmithForm {
  IntMatrix U;  // unimodular, rows x rows
  IntMatrix D;  // diagonal, d_i | d_{i+1}, d_i >= 0
  IntMatrix V;  // unimodular, cols x cols
  std::vector<Integer> divisors() const;  // nonzero diagonal entries
};
/// D = U·M·V.
SmithForm smith_normal_form(const IntMatrix& m);

/// Solves m·x = b over Z; nullopt if no integral solution exists.
std::optional<IntVector> solve_integral(const IntMatrix& m, const IntVector& b);

/// Is every column of sub in the column lattice of amb?
bool lattice_contains(const IntMatrix& amb, const IntMatrix& sub);
/// [L_amb : L_sub] for column lattices; nullopt if the index is infinite (rank
/// drop). Throws DomainError if sub is not contained in amb.
std::optional<Integer> lattice_index(const IntMatrix& sub, const IntMatrix& amb);

/// Is v in the Z_(p)-span of the columns of gens? (p = 0 means Z.)
bool local_span_contains(const IntMatrix& gens, const IntVector& v, unsigned long p);
/// Rational-vector form: clears denominators prime to p first; a vector with a
/// p in some denominator is only contained if the span allows it.
bool local_span_contains(const std::vector<RationalVector>& gens, const RationalVector& v, unsigned long p);
/// Equality of Z_(p)-spans (both inclusions).
bool same_local_span(const std::vector<RationalVector>& a, const std::vector<RationalVector>& b, unsigned long p);
/// Smallest common denominator of a set of vectors.
Integer common_denominator(const std::vector<RationalVector>& vs);

}  // namespace bisetforge
