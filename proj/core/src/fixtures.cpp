#include "bisetforge/fixtures.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "bisetforge/errors.hpp"

#ifndef BISETFORGE_DEFAULT_FIXTURE_DIR
#define BISETFORGE_DEFAULT_FIXTURE_DIR "fixtures"
#endif

namespace bisetforge {

using nlohmann::json;

std::string fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string fixture_checksum(const json& doc) {
  json copy = doc;
  copy.erase("checksum");
  return fnv1a64(copy.dump());
}

std::filesystem::path resolve_fixture_dir(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return *flag;
  if (const char* env = std::getenv("BISETFORGE_FIXTURES"); env && *env) return env;
  return BISETFORGE_DEFAULT_FIXTURE_DIR;
}

json load_fixture(const std::filesystem::path& dir, const std::string& file) {
  const auto path = dir / file;
  std::ifstream in(path);
  if (!in) throw FixtureError("cannot open fixture " + path.string());
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw FixtureError("malformed fixture " + path.string() + ": " + e.what());
  }
  if (!doc.is_object() || !doc.contains("checksum")) throw FixtureError(path.string() + " has no checksum");
  const std::string expect = doc["checksum"].get<std::string>();
  const std::string got = fixture_checksum(doc);
  if (expect != got) throw FixtureError(path.string() + ": checksum " + got + " does not match recorded " + expect);
  return doc;
}

void write_fixture(const std::filesystem::path& dir, const std::string& file, json doc) {
  std::filesystem::create_directories(dir);
  if (!doc.contains("errata")) doc["errata"] = json::array();
  doc["checksum"] = fixture_checksum(doc);
  std::ofstream out(dir / file);
  if (!out) throw FixtureError("cannot write " + (dir / file).string());
  out << doc.dump(1) << "\n";
}

std::vector<Erratum> parse_errata(const json& doc) {
  std::vector<Erratum> out;
  if (!doc.contains("errata")) return out;
  for (const auto& e : doc["errata"]) {
    out.push_back({e.at("cell").get<std::string>(), e.at("computed").get<std::string>(), e.value("note", "")});
  }
  return out;
}

bool has_erratum(const std::vector<Erratum>& errata, const std::string& cell, const std::string& computed) {
  for (const auto& e : errata)
    if (e.cell == cell && e.computed == computed) return true;
  return false;
}

std::string to_string(const SymbolicEntry& e) {
  if (e.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < e.size(); ++i) {
    const auto& [c, l] = e[i];
    if (i) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    Rational a = abs(c);
    if (a != 1) os << a.get_str() << "*";
    os << l;
  }
  return os.str();
}

nlohmann::json to_json(const SymbolicEntry& e) {
  json out = json::array();
  for (const auto& [c, l] : e) {
    if (c.get_den() == 1 && c.get_num().fits_slong_p())
      out.push_back({c.get_num().get_si(), l});
    else
      out.push_back({to_string(c), l});
  }
  return out;
}

nlohmann::json to_json(const RelationSpec& r) {
  json out = json::array();
  for (const auto& t : r) out.push_back({to_string(t.coef), t.arrows});
  return out;
}

namespace {
Rational as_rational(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw FixtureError("expected a rational, got " + j.dump());
}

SymbolicEntry parse_entry(const json& j) {
  SymbolicEntry e;
  for (const auto& term : j) e.emplace_back(as_rational(term.at(0)), term.at(1).get<std::string>());
  return e;
}

std::vector<std::vector<SymbolicEntry>> parse_table(const json& j) {
  std::vector<std::vector<SymbolicEntry>> t;
  for (const auto& row : j) {
    std::vector<SymbolicEntry> r;
    for (const auto& cell : row) r.push_back(parse_entry(cell));
    t.push_back(std::move(r));
  }
  return t;
}

IntMatrix parse_int_matrix(const json& j) {
  IntMatrix m(j.size(), j.empty() ? 0 : j[0].size());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (j[r].size() != m.cols()) throw FixtureError("ragged integer matrix");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = Integer(j[r][c].get<long>());
  }
  return m;
}

NamedBlocks parse_blocks(const json& j) {
  NamedBlocks out;
  for (auto it = j.begin(); it != j.end(); ++it) out.emplace_back(it.key(), BlockElement::from_json(it.value()));
  return out;
}

RelationSpec parse_relation(const json& j) {
  RelationSpec r;
  for (const auto& term : j) r.push_back({as_rational(term.at(0)), term.at(1).get<std::vector<std::string>>()});
  return r;
}

std::vector<RelationSpec> parse_relations(const json& j) {
  std::vector<RelationSpec> out;
  for (const auto& r : j) out.push_back(parse_relation(r));
  return out;
}
}  // namespace

std::size_t PeirceFixture::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return i;
  throw FixtureError("unknown Peirce label '" + label + "'");
}

const RationalVector& PeirceFixture::idempotent(const std::string& name) const {
  for (const auto& [n, v] : idempotents)
    if (n == name) return v;
  throw FixtureError("unknown idempotent '" + name + "'");
}

const BlockElement& lookup(const NamedBlocks& blocks, const std::string& name) {
  for (const auto& [n, b] : blocks)
    if (n == name) return b;
  throw FixtureError("unknown block element '" + name + "'");
}

Fixtures Fixtures::load(const std::filesystem::path& dir) {
  Fixtures f;
  f.dir = dir;
  try {
    const json p = load_fixture(dir, "peirce.json");
    f.peirce.h_basis = p.at("h_basis").get<std::vector<std::string>>();
    auto coeffs = [&](const json& sparse) {
      RationalVector v = zero_vector(f.peirce.h_basis.size());
      for (auto it = sparse.begin(); it != sparse.end(); ++it) {
        std::size_t k = 0;
        while (k < f.peirce.h_basis.size() && f.peirce.h_basis[k] != it.key()) ++k;
        if (k == f.peirce.h_basis.size()) throw FixtureError("unknown H label '" + it.key() + "'");
        v[k] = as_rational(it.value());
      }
      return v;
    };
    for (const char* name : {"e", "g", "h", "eps2", "eps3", "eps4"})
      f.peirce.idempotents.emplace_back(name, coeffs(p.at("idempotents").at(name)));
    for (const auto& b : p.at("basis22")) {
      f.peirce.labels.push_back(b.at("label").get<std::string>());
      f.peirce.basis22.push_back(coeffs(b.at("coeffs")));
    }
    f.peirce.table = parse_table(p.at("table"));
    f.peirce.errata = parse_errata(p);

    const json m = load_fixture(dir, "matrix_m.json");
    f.matrix.h_tilde = m.at("h_tilde").get<std::vector<std::string>>();
    f.matrix.coordinates = m.at("coordinates").get<std::vector<std::string>>();
    f.matrix.M = parse_int_matrix(m.at("M"));
    f.matrix.modulus = Integer(m.at("reduced_system").at("modulus").get<long>());
    f.matrix.reduced_system = parse_int_matrix(m.at("reduced_system").at("rows"));
    f.matrix.errata = parse_errata(m);

    const json b = load_fixture(dir, "block_elements.json");
    f.blocks.conjugators = parse_blocks(b.at("conjugators"));
    f.blocks.local2_idempotents = parse_blocks(b.at("local2").at("idempotents"));
    f.blocks.gamma_basis = parse_blocks(b.at("local2").at("gamma_basis"));
    f.blocks.local2_corner = parse_blocks(b.at("local2").at("corner"));
    f.blocks.local3_idempotents = parse_blocks(b.at("local3").at("idempotents"));
    f.blocks.local3_corner = parse_blocks(b.at("local3").at("corner"));
    f.blocks.corner_a = parse_blocks(b.at("corner_a"));
    f.blocks.errata = parse_errata(b);

    const json c = load_fixture(dir, "corner_tables.json");
    f.corners.a_prime = {c.at("a_prime").at("basis").get<std::vector<std::string>>(), parse_table(c.at("a_prime").at("table"))};
    const json& g = c.at("gamma");
    f.corners.gamma = {g.at("basis").get<std::vector<std::string>>(), parse_table(g.at("table"))};
    f.corners.radical = parse_int_matrix(g.at("radical"));
    f.corners.radical_cubed = parse_int_matrix(g.at("radical_cubed"));
    f.corners.residue_field_size = g.at("residue_field_size").get<int>();
    f.corners.errata = parse_errata(c);

    const json pr = load_fixture(dir, "presentations.json");
    for (const auto& q : pr.at("presentations")) {
      PresentationFixture pf;
      pf.name = q.at("name").get<std::string>();
      pf.ring = q.at("ring").get<std::string>();
      pf.corner = q.at("corner").get<std::string>();
      pf.vertices = q.at("vertices").get<std::vector<std::string>>();
      for (const auto& a : q.at("arrows")) {
        pf.arrows.emplace_back(a.at(0).get<std::string>(), a.at(1).get<std::string>(), a.at(2).get<std::string>());
      }
      pf.assignment = q.at("assignment").get<std::map<std::string, std::string>>();
      pf.relations = parse_relations(q.at("relations"));
      pf.long_relations = parse_relations(q.at("long_relations"));
      pf.normal_forms = q.at("normal_forms").get<std::vector<std::string>>();
      for (const auto& id : q.at("identities")) {
        pf.identities.emplace_back(id.at("element").get<std::string>(), parse_relation(id.at("terms")));
      }
      for (const auto& r : q.at("reductions")) {
        pf.reductions.emplace_back(r.at("prime").get<unsigned long>(), parse_relations(r.at("relations")));
      }
      f.presentations.push_back(std::move(pf));
    }
    f.presentation_errata = parse_errata(pr);
  } catch (const json::exception& e) {
    throw FixtureError("fixture schema error in " + dir.string() + ": " + e.what());
  }
  return f;
}

const PresentationFixture& Fixtures::presentation(const std::string& name) const {
  for (const auto& p : presentations)
    if (p.name == name) return p;
  throw FixtureError("unknown presentation '" + name + "'");
}

}  // namespace bisetforge
