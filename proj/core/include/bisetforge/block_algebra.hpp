#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "bisetforge/matrix.hpp"
#include "bisetforge/rational.hpp"

namespace bisetforge {

/// a + b·η̄ + c·ξ̄ in Q[η̄,ξ̄] = Q[η,ξ]/(η², ηξ, ξ²).
struct DualPair {
  Rational a, b, c;

  static DualPair constant(const Rational& a) { return {a, 0, 0}; }
  friend DualPair operator+(const DualPair& p, const DualPair& q) { return {p.a + q.a, p.b + q.b, p.c + q.c}; }
  friend DualPair operator-(const DualPair& p, const DualPair& q) { return {p.a - q.a, p.b - q.b, p.c - q.c}; }
  friend DualPair operator*(const DualPair& p, const DualPair& q) {
    return {p.a * q.a, p.a * q.b + q.a * p.b, p.a * q.c + q.a * p.c};
  }
  friend DualPair operator*(const Rational& s, const DualPair& p) { return {s * p.a, s * p.b, s * p.c}; }
  friend bool operator==(const DualPair& p, const DualPair& q) { return p.a == q.a && p.b == q.b && p.c == q.c; }
  friend bool operator!=(const DualPair& p, const DualPair& q) { return !(p == q); }
  bool is_zero() const { return a == 0 && b == 0 && c == 0; }
  std::string to_string() const;
};

DualPair dual_multiply(const DualPair& p, const DualPair& q);
/// Invertible in R[η̄,ξ̄] iff the constant term is a unit of R.
bool is_unit(const DualPair& p, Ring ring);
/// a⁻¹ − a⁻²b·η̄ − a⁻²c·ξ̄. Throws DomainError when a = 0.
DualPair inverse(const DualPair& p);

/// An element of A in the expanded 6×6 shape:
///
///   [ s s s 0 0 t ]
///   [ s s s 0 0 t ]
///   [ s s s 0 0 t ]
///   [ 0 0 0 u 0 v ]
///   [ 0 0 0 0 w 0 ]
///   [ x x x y 0 z ]      z ∈ Q[η̄,ξ̄]
///
/// Products follow matrix multiplication except that A_{1,4}·A_{4,1} and
/// A_{2,4}·A_{4,2} vanish, x·t lands in η̄ and y·v lands in ξ̄ − 12η̄.
class BlockElement {
 public:
  static constexpr std::size_t kDim = 22;

  BlockElement();
  static BlockElement zero() { return BlockElement(); }
  static BlockElement one();

  Rational& s(int i, int j) { return s_[i * 3 + j]; }
  const Rational& s(int i, int j) const { return s_[i * 3 + j]; }
  Rational& t(int i) { return t_[i]; }
  const Rational& t(int i) const { return t_[i]; }
  Rational& x(int i) { return x_[i]; }
  const Rational& x(int i) const { return x_[i]; }
  Rational u, v, w, y;
  DualPair z;

  /// Coordinate names (s11..s33, t1..t3, u, v, w, x1..x3, y, z1, z2, z3).
  Rational& at(std::string_view name);
  const Rational& at(std::string_view name) const;

  /// s11,s21,s31,s12,...,s33,x1,x2,x3,u,y,w,t1,t2,t3,v,z1,z2,z3.
  static const std::array<std::string_view, kDim>& lattice_names();
  /// s11,s12,...,s33,t1,t2,t3,u,v,w,x1,x2,x3,y,z1,z2,z3: the order of the
  /// Peirce basis e, b_{e,g}, ..., b''_{eps4,eps4}.
  static const std::array<std::string_view, kDim>& peirce_names();
  RationalVector lattice_coordinates() const;
  RationalVector peirce_coordinates() const;
  static BlockElement from_lattice(const RationalVector& v);
  static BlockElement from_peirce(const RationalVector& v);
  static BlockElement lattice_unit(std::size_t i);

  friend BlockElement operator*(const BlockElement& a, const BlockElement& b);
  friend BlockElement operator+(const BlockElement& a, const BlockElement& b);
  friend BlockElement operator-(const BlockElement& a, const BlockElement& b);
  friend BlockElement operator*(const Rational& k, const BlockElement& a);
  friend bool operator==(const BlockElement& a, const BlockElement& b);
  friend bool operator!=(const BlockElement& a, const BlockElement& b) { return !(a == b); }

  bool is_zero() const;
  bool is_integral() const;
  bool is_p_integral(unsigned long p) const;
  /// Matrix of y ↦ (*this)·y in lattice coordinates.
  RatMatrix left_multiplication_matrix() const;
  /// Two-sided inverse; throws SingularMatrixError for non-units.
  BlockElement inverse() const;

  /// Sparse {"s11": "1", "z2": "-1/2", ...}.
  nlohmann::json to_json() const;
  static BlockElement from_json(const nlohmann::json& j);
  /// Six display rows; entry (6,6) is printed as a polynomial in eta, xi.
  std::vector<std::vector<std::string>> display() const;

 private:
  std::array<Rational, 9> s_;
  std::array<Rational, 3> t_;
  std::array<Rational, 3> x_;
};

BlockElement block_multiply(const BlockElement& a, const BlockElement& b);

}  // namespace bisetforge
