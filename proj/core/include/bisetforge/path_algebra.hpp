#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "bisetforge/block_algebra.hpp"
#include "bisetforge/fixtures.hpp"
#include "bisetforge/rational.hpp"
#include "bisetforge/report.hpp"

namespace bisetforge {

class Quiver {
 public:
  struct Arrow {
    std::string label;
    std::size_t source = 0, target = 0;
  };

  Quiver() = default;
  /// Throws DomainError on duplicate labels or unknown endpoints.
  Quiver(std::vector<std::string> vertices, std::vector<std::tuple<std::string, std::string, std::string>> arrows);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  std::size_t vertex_index(const std::string& label) const;
  std::size_t arrow_index(const std::string& label) const;
  bool has_vertex(const std::string& label) const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
};

/// A path read left to right: arrows[0] leaves source. Trivial paths (no
/// arrows) are the vertex idempotents.
struct Path {
  std::size_t source = 0, target = 0;
  std::vector<std::size_t> arrows;

  static Path vertex(std::size_t v) { return {v, v, {}}; }
  bool trivial() const { return arrows.empty(); }
  std::size_t length() const { return arrows.size(); }
  /// Degree-lexicographic: length, then arrow indices; trivial paths by vertex.
  friend bool operator<(const Path& a, const Path& b);
  friend bool operator==(const Path& a, const Path& b) {
    return a.source == b.source && a.target == b.target && a.arrows == b.arrows;
  }
};

std::optional<Path> compose(const Quiver& q, const Path& a, const Path& b);
Path arrow_path(const Quiver& q, std::size_t arrow);
/// "e3" for a trivial path, "tau1 tau2" otherwise.
std::string path_to_string(const Quiver& q, const Path& p);
Path parse_path(const Quiver& q, const std::string& text);

/// Finite linear combination of paths, coefficients normalized in a ring.
using PathElement = std::map<Path, Rational>;
std::string to_string(const Quiver& q, const PathElement& x);
/// Throws DomainError for mismatched endpoints inside one relation.
PathElement path_element(const Quiver& q, const RelationSpec& spec, Ring ring);

/// Rewriting system whose rules send the deglex-largest path of each relation
/// to the remaining terms.
class RewritingSystem {
 public:
  /// Throws DomainError if a leading coefficient is not a unit of ring.
  RewritingSystem(const Quiver& q, const std::vector<PathElement>& relations, Ring ring, std::size_t bound = 8);

  PathElement reduce(const PathElement& x) const;
  bool is_irreducible(const Path& p) const;
  /// Every overlap and inclusion ambiguity of the rule heads resolves.
  bool confluent() const { return unresolved_.empty(); }
  const std::vector<std::string>& unresolved() const { return unresolved_; }
  /// Irreducible paths; throws NonTerminationError when one of length
  /// `bound` exists.
  std::vector<Path> normal_forms() const;
  Ring ring() const { return ring_; }

 private:
  struct Rule {
    Path head;
    PathElement tail;
  };
  std::optional<std::pair<std::size_t, std::size_t>> find_head(const Path& p) const;
  void check_ambiguities();

  const Quiver* q_;
  Ring ring_;
  std::size_t bound_;
  std::vector<Rule> rules_;
  std::vector<std::string> unresolved_;
};

struct QuotientBasis {
  std::vector<Path> paths;
  std::size_t rank = 0;
  bool confluent = false;
};
/// Irreducible paths of the confluent rewriting closure. The rank is only
/// certified when confluent is true.
QuotientBasis quotient_basis(const Quiver& q, const std::vector<PathElement>& relations, Ring ring,
                             std::size_t bound = 8);

/// eΛe with an explicit basis of block elements and its coordinate table.
struct CornerAlgebra {
  Ring ring = Ring::Q;
  std::vector<std::string> labels;
  std::vector<BlockElement> basis;
  std::vector<std::vector<RationalVector>> table;  // table[i][j] = coordinates of basis_i basis_j
  RationalVector unit;

  std::size_t rank() const { return basis.size(); }
  std::size_t index_of(const std::string& label) const;
  RationalVector basis_vector(std::size_t i) const;
  RationalVector multiply(const RationalVector& a, const RationalVector& b) const;
  RationalVector add(const RationalVector& a, const RationalVector& b) const;
  RationalVector scale(const Rational& k, const RationalVector& a) const;
  /// Coordinates of an element of A in the basis; throws DomainError outside
  /// the span or the ring.
  RationalVector coordinates(const BlockElement& a) const;
  /// Table with coefficients reduced mod p; throws DomainError unless the
  /// ring is Z_(p).
  CornerAlgebra reduce_mod_p(unsigned long p) const;
};

/// Corner of the order spanned (over ring) by ambient_generators, cut by the
/// sum of idempotents. With basis empty an echelon basis is chosen. Throws
/// DomainError on non-idempotent or non-orthogonal input, idempotents outside
/// the order, or a basis that does not span the corner.
CornerAlgebra corner(const std::vector<BlockElement>& ambient_generators, Ring ring, const NamedBlocks& idempotents,
                     const NamedBlocks& basis = {});

struct Presentation {
  std::string name;
  Ring ring = Ring::Q;
  Quiver quiver;
  std::vector<PathElement> relations;
  std::vector<PathElement> long_relations;
  std::map<std::string, std::string> assignment;  // vertex or arrow -> corner basis label
  std::vector<std::pair<std::string, PathElement>> identities;
  std::vector<std::string> normal_forms;  // expected, as path strings

  static Presentation from_fixture(const PresentationFixture& f);
};

/// Coefficients reduced mod p, vanishing relations dropped.
Presentation reduce_mod_p(const Presentation& pres, unsigned long p);

/// Image of a path combination under the assignment.
RationalVector evaluate(const CornerAlgebra& c, const Presentation& pres, const PathElement& x);

/// Relations, composability, identities, span and rank; together these
/// certify that the assignment induces an isomorphism kQ/I → corner.
Report verify_presentation(const CornerAlgebra& c, const Presentation& pres, std::size_t bound = 8);

}  // namespace bisetforge
