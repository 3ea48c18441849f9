#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bisetforge/biset.hpp"
#include "bisetforge/rational.hpp"
#include "bisetforge/report.hpp"

namespace bisetforge {

/// c(i,j,k): H_i · H_j = Σ_k c(i,j,k) H_k.
class StructureTable {
 public:
  StructureTable() = default;
  explicit StructureTable(std::size_t rank) : rank_(rank), c_(rank * rank * rank, 0) {}

  std::size_t rank() const { return rank_; }
  std::int64_t operator()(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * rank_ + j) * rank_ + k]; }
  std::int64_t& operator()(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * rank_ + j) * rank_ + k]; }
  std::vector<std::int64_t> product(std::size_t i, std::size_t j) const;
  void set_product(std::size_t i, std::size_t j, const std::vector<std::int64_t>& v);

  friend bool operator==(const StructureTable& a, const StructureTable& b) {
    return a.rank_ == b.rank_ && a.c_ == b.c_;
  }
  /// {"basis": [...labels], "table": [[[c_ij0, ...], ...], ...]}.
  nlohmann::json to_json(const std::vector<std::string>& labels) const;

 private:
  std::size_t rank_ = 0;
  std::vector<std::int64_t> c_;
};

/// By explicit orbit enumeration of each tensor product.
StructureTable structure_constants_by_orbits(const BisetContext& ctx, std::shared_ptr<const BisetContext> owner);
/// By the Mackey formula
///   [(G×G)/U]·[(G×G)/V] = Σ_{t ∈ p2(U)\G/p1(V)} [(G×G)/(U ∗ ᵗV)], ᵗV = {(t b t⁻¹, c)}.
StructureTable structure_constants_by_double_cosets(const BisetContext& ctx);

class BurnsideRing;

/// A coefficient vector over the basis of B_R(G,G).
struct BurnsideElement {
  Ring ring = Ring::Q;
  RationalVector coeffs;

  friend bool operator==(const BurnsideElement& a, const BurnsideElement& b) {
    return a.ring == b.ring && a.coeffs == b.coeffs;
  }
  friend bool operator!=(const BurnsideElement& a, const BurnsideElement& b) { return !(a == b); }
};

/// B_R(G,G) with integer structure constants; the orbit and double-coset
/// tables are both computed and must agree.
class BurnsideRing {
 public:
  explicit BurnsideRing(std::shared_ptr<const BisetContext> ctx);
  static const BurnsideRing& s3();

  const BisetContext& context() const { return *ctx_; }
  std::shared_ptr<const BisetContext> context_ptr() const { return ctx_; }
  const StructureTable& table() const { return table_; }
  const StructureTable& double_coset_table() const { return fast_table_; }
  std::size_t rank() const { return ctx_->rank(); }
  std::vector<std::string> labels() const;

  BurnsideElement zero(Ring ring = Ring::Q) const;
  BurnsideElement one(Ring ring = Ring::Q) const;
  BurnsideElement basis(std::size_t i, Ring ring = Ring::Q) const;
  /// Validates and normalizes coefficients for the ring.
  BurnsideElement make(const RationalVector& coeffs, Ring ring) const;
  /// Reinterprets over another ring (for example Z -> F2); throws DomainError
  /// when a coefficient does not belong.
  BurnsideElement change_ring(const BurnsideElement& x, Ring ring) const;

  BurnsideElement add(const BurnsideElement& a, const BurnsideElement& b) const;
  BurnsideElement sub(const BurnsideElement& a, const BurnsideElement& b) const;
  BurnsideElement scale(const Rational& s, const BurnsideElement& a) const;
  BurnsideElement multiply(const BurnsideElement& a, const BurnsideElement& b) const;

  /// "H_{0,0}:-1/2,H_{1,0}:1" (labels or subgroup labels).
  BurnsideElement parse(const std::string& text, Ring ring) const;
  std::string format(const BurnsideElement& x) const;

 private:
  std::shared_ptr<const BisetContext> ctx_;
  StructureTable table_;
  StructureTable fast_table_;
};

/// Orbit and double-coset tables agree, identity at the diagonal class,
/// associativity on every basis triple, and Σ_k c(i,j,k)|B_k| = |X ×_G Y|
/// counted by Burnside's lemma.
Report verify_ring_axioms(const BurnsideRing& ring);

}  // namespace bisetforge
