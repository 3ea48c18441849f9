#pragma once

#include <cstdint>

#include "bisetforge/block_algebra.hpp"
#include "bisetforge/burnside_ring.hpp"
#include "bisetforge/fixtures.hpp"
#include "bisetforge/report.hpp"

namespace bisetforge {

/// The linear isomorphism γ: A → B_Q(S3,S3) sending the Peirce coordinate
/// units of a block element to the Peirce basis e, b_{e,g}, ..., b''_{eps4,eps4}.
class Gamma {
 public:
  /// Throws VerificationError if the Peirce vectors are linearly dependent.
  Gamma(const BurnsideRing& ring, const PeirceFixture& fixture);

  BurnsideElement gamma(const BlockElement& a) const;
  BlockElement gamma_inv(const BurnsideElement& x) const;

  /// Columns are the Peirce basis vectors in H coordinates.
  const RatMatrix& change_of_basis() const { return p_; }
  const RatMatrix& change_of_basis_inverse() const { return p_inv_; }
  const BurnsideElement& peirce_element(std::size_t i) const { return peirce_[i]; }
  /// Coordinates of x in the Peirce basis.
  RationalVector peirce_coordinates(const BurnsideElement& x) const;
  static BlockElement block_basis(std::size_t i);
  const BurnsideRing& ring() const { return *ring_; }

 private:
  const BurnsideRing* ring_;
  RatMatrix p_;
  RatMatrix p_inv_;
  std::vector<BurnsideElement> peirce_;
};

/// Idempotents, orthogonality, the unit decomposition, the 22×22 table and
/// centrality of eps3, computed by the biset engine, against the fixture.
Report verify_peirce(const BurnsideRing& ring, const PeirceFixture& fixture, const Gamma& gamma);
/// The 22×22 table of Peirce basis products, recomputed.
std::vector<std::vector<SymbolicEntry>> peirce_table(const BurnsideRing& ring, const PeirceFixture& fixture,
                                                     const Gamma& gamma);
/// γ(x·y) = γ(x)·γ(y) on all block basis pairs, γ(1) = 1, and seeded round trips.
Report verify_gamma_morphism(const BurnsideRing& ring, const Gamma& gamma, std::uint64_t seed = 20240601,
                             std::size_t samples = 100);

}  // namespace bisetforge
