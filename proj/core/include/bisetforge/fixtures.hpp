#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "bisetforge/block_algebra.hpp"
#include "bisetforge/matrix.hpp"

namespace bisetforge {

/// FNV-1a 64-bit, lower-case hex.
std::string fnv1a64(std::string_view bytes);
/// Checksum of a fixture document: FNV-1a over the compact, key-sorted dump of
/// the document without its "checksum" member.
std::string fixture_checksum(const nlohmann::json& doc);

/// Explicit flag, then $BISETFORGE_FIXTURES, then the build-time default.
std::filesystem::path resolve_fixture_dir(const std::optional<std::string>& flag);
/// Reads and checksum-verifies a fixture. Throws FixtureError.
nlohmann::json load_fixture(const std::filesystem::path& dir, const std::string& file);
/// Writes doc (pretty, sorted keys) with a fresh checksum.
void write_fixture(const std::filesystem::path& dir, const std::string& file, nlohmann::json doc);

/// A documented disagreement between a shipped value and recomputation.
struct Erratum {
  std::string cell;      // e.g. "table[18][13]", "M[3][4]"
  std::string computed;  // canonical text of the recomputed value
  std::string note;
};
std::vector<Erratum> parse_errata(const nlohmann::json& doc);
/// Is cell's disagreement (with the given computed value) documented?
bool has_erratum(const std::vector<Erratum>& errata, const std::string& cell, const std::string& computed);

/// Σ coef·label.
using SymbolicEntry = std::vector<std::pair<Rational, std::string>>;
std::string to_string(const SymbolicEntry& e);
/// [[coef, label], ...] with integral coefficients as numbers.
nlohmann::json to_json(const SymbolicEntry& e);


struct PeirceFixture {
  std::vector<std::string> h_basis;
  std::vector<std::pair<std::string, RationalVector>> idempotents;  // e, g, h, eps2, eps3, eps4
  std::vector<std::string> labels;                                  // e, b_{e,g}, ..., b''_{eps4,eps4}
  std::vector<RationalVector> basis22;                              // over h_basis
  std::vector<std::vector<SymbolicEntry>> table;
  std::vector<Erratum> errata;

  std::size_t index_of(const std::string& label) const;
  const RationalVector& idempotent(const std::string& name) const;
};

struct MatrixFixture {
  std::vector<std::string> h_tilde;
  std::vector<std::string> coordinates;
  IntMatrix M;
  Integer modulus;
  IntMatrix reduced_system;
  std::vector<Erratum> errata;
};

using NamedBlocks = std::vector<std::pair<std::string, BlockElement>>;
const BlockElement& lookup(const NamedBlocks& blocks, const std::string& name);

struct BlockFixture {
  NamedBlocks conjugators;      // x1, x2, x3
  NamedBlocks local2_idempotents;
  NamedBlocks gamma_basis;      // b1..b4
  NamedBlocks local2_corner;    // e3, e4, e5, tau1..tau7
  NamedBlocks local3_idempotents;
  NamedBlocks local3_corner;    // e3..e6, tau1..tau6
  NamedBlocks corner_a;         // a_{1,1}, ..., a''_{4,4}
  std::vector<Erratum> errata;
};

struct SymbolicTable {
  std::vector<std::string> basis;
  std::vector<std::vector<SymbolicEntry>> table;
};

struct CornerTablesFixture {
  SymbolicTable a_prime;
  SymbolicTable gamma;
  IntMatrix radical;        // rows: generators of J in the b-basis
  IntMatrix radical_cubed;  // rows: generators of J³
  int residue_field_size = 0;
  std::vector<Erratum> errata;
};

/// coef · (a_1 a_2 ... a_k), arrows by label; the empty path is not used in
/// relations.
struct PathTerm {
  Rational coef;
  std::vector<std::string> arrows;
};
using RelationSpec = std::vector<PathTerm>;
/// [[coef, [arrow, ...]], ...] with coefficients as strings.
nlohmann::json to_json(const RelationSpec& r);

struct PresentationFixture {
  std::string name;
  std::string ring;
  std::string corner;
  std::vector<std::string> vertices;
  std::vector<std::tuple<std::string, std::string, std::string>> arrows;  // label, source, target
  std::map<std::string, std::string> assignment;
  std::vector<RelationSpec> relations;
  std::vector<RelationSpec> long_relations;
  std::vector<std::string> normal_forms;  // vertex names or space-separated arrow words
  std::vector<std::pair<std::string, RelationSpec>> identities;
  std::vector<std::pair<unsigned long, std::vector<RelationSpec>>> reductions;
};

struct Fixtures {
  std::filesystem::path dir;
  PeirceFixture peirce;
  MatrixFixture matrix;
  BlockFixture blocks;
  CornerTablesFixture corners;
  std::vector<PresentationFixture> presentations;
  std::vector<Erratum> presentation_errata;

  static Fixtures load(const std::filesystem::path& dir);
  const PresentationFixture& presentation(const std::string& name) const;
};

}  // namespace bisetforge
