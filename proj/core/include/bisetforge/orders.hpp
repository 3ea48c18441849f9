#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bisetforge/block_algebra.hpp"
#include "bisetforge/burnside_ring.hpp"
#include "bisetforge/fixtures.hpp"
#include "bisetforge/peirce.hpp"
#include "bisetforge/report.hpp"

namespace bisetforge {

/// form(λ) ≡ 0 mod prime^exponent, form a small integer combination of block
/// coordinates.
struct Congruence {
  std::vector<std::pair<std::string, long>> form;
  unsigned long prime = 0;
  unsigned exponent = 0;
  std::size_t display_line = 0;  // which line of the printed list it sits on

  long modulus() const;
  Rational evaluate(const BlockElement& a) const;
  std::string to_string() const;
};

/// The fifteen atomic conditions cutting out Λ inside A_Z. Several share a
/// printed line, giving thirteen lines.
const std::vector<Congruence>& lambda_congruences();
std::size_t displayed_line_count();

/// Integral element satisfying every congruence. Throws DomainError for
/// non-integral input.
bool lambda_membership(const BlockElement& a);
/// C·λ ≡ 0 mod modulus, λ the lattice coordinates of a.
bool system_membership(const BlockElement& a, const IntMatrix& system, const Integer& modulus);
/// Membership in Λ_(p): the p-part of the congruences. Throws DomainError for
/// entries with p in a denominator.
bool localized_membership(const BlockElement& a, unsigned long p);

/// δ(y) = c⁻¹ γ⁻¹(y) c with c = x1 x2 x3, and the matrix of δ on H̃.
class LambdaOrder {
 public:
  LambdaOrder(const BurnsideRing& ring, const Gamma& gamma, const BlockFixture& blocks, const MatrixFixture& matrix);

  BlockElement delta(const BurnsideElement& y) const;
  BurnsideElement delta_inv(const BlockElement& a) const;

  const BlockElement& conjugator() const { return c_; }
  const BlockElement& conjugator_inverse() const { return c_inv_; }
  /// Indices of H̃_1..H̃_22 in the H basis.
  const std::vector<std::size_t>& h_tilde() const { return h_tilde_; }
  /// Column j: δ(H̃_j) in lattice coordinates.
  const RatMatrix& representation_matrix() const { return m_; }
  bool representation_is_integral() const;
  /// Integer view; throws VerificationError if some entry is fractional.
  IntMatrix integral_representation() const;
  /// δ(H̃_j) as block elements.
  std::vector<BlockElement> lattice_generators() const;

  const BurnsideRing& ring() const { return *ring_; }
  const Gamma& gamma() const { return *gamma_; }

 private:
  const BurnsideRing* ring_;
  const Gamma* gamma_;
  BlockElement c_, c_inv_;
  std::vector<std::size_t> h_tilde_;
  RatMatrix m_;
};

/// Column lattice {λ : C·λ ≡ 0 mod m} as a basis matrix, via Smith form.
IntMatrix congruence_lattice(const IntMatrix& system, const Integer& modulus);
/// The displayed congruences as one system modulo 24.
IntMatrix displayed_system();

/// Entry-by-entry comparison of the computed M with the fixture.
Report verify_representation_matrix(const LambdaOrder& order, const MatrixFixture& fixture);
/// δ(B_Z(S3,S3)) = Λ and the congruence characterisations.
Report verify_lambda_theorem(const LambdaOrder& order, const MatrixFixture& fixture);
/// Idempotents of Λ_(p) and their corners (p = 2 or 3).
Report verify_local_idempotents(const LambdaOrder& order, const BlockFixture& blocks,
                                const CornerTablesFixture& corners, unsigned long p);

/// lambda_membership(a) ⇔ localized_membership(a, 2) ∧ localized_membership(a, 3)
/// on the δ-images and on seeded random integral blocks.
Report verify_localization_split(const LambdaOrder& order, std::uint64_t seed = 20240601,
                                 std::size_t samples = 1000);

}  // namespace bisetforge
