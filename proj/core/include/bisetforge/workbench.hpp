#pragma once

#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "bisetforge/burnside_ring.hpp"
#include "bisetforge/fixtures.hpp"
#include "bisetforge/orders.hpp"
#include "bisetforge/path_algebra.hpp"
#include "bisetforge/peirce.hpp"
#include "bisetforge/report.hpp"

namespace bisetforge {

/// Everything the verification stages share, built once from a fixture
/// directory.
class Workbench {
 public:
  explicit Workbench(const std::filesystem::path& fixture_dir);

  const Fixtures& fixtures() const { return fixtures_; }
  const BurnsideRing& ring() const { return *ring_; }
  const Gamma& gamma() const { return *gamma_; }
  const LambdaOrder& order() const { return *order_; }

  /// A′ = (a11+a22+a33+a44) A (a11+a22+a33+a44) over Q.
  CornerAlgebra corner_a() const;
  /// Λ′_(p) over Z_(p), p = 2 or 3.
  CornerAlgebra corner_local(unsigned long p) const;
  Presentation presentation(const std::string& name) const;

  /// subgroups, ring, peirce, gamma, lambda, local2, local3, paths.
  static const std::vector<std::string>& stages();
  /// One stage, or "all" for every stage in dependency order. Throws
  /// DomainError for an unknown name.
  Report run(const std::string& stage) const;

  /// Writes every fixture file recomputed from first principles into dir.
  /// Definitions that cannot be derived (idempotents, bases, conjugators,
  /// quivers) are copied.
  void emit_fixtures(const std::filesystem::path& dir) const;

 private:
  Report run_subgroups() const;
  Report run_paths() const;

  Fixtures fixtures_;
  const BurnsideRing* ring_;
  std::unique_ptr<Gamma> gamma_;
  std::unique_ptr<LambdaOrder> order_;
};

/// Checks A′'s table against the fixture, cell by cell.
Report verify_corner_table(const CornerAlgebra& c, const SymbolicTable& expected, const std::vector<Erratum>& errata,
                           const std::string& stage);

}  // namespace bisetforge
