#include "bisetforge/workbench.hpp"

#include <algorithm>
#include <set>

#include "bisetforge/errors.hpp"
#include "bisetforge/linalg.hpp"
#include "bisetforge/perm_groups.hpp"

namespace bisetforge {

namespace {

NamedBlocks ordered(const NamedBlocks& blocks, const std::vector<std::string>& names) {
  NamedBlocks out;
  for (const auto& n : names) out.emplace_back(n, lookup(blocks, n));
  return out;
}

const std::vector<std::string> kLocal2Basis = {"e3",   "e4",   "e5",   "tau1", "tau2",
                                               "tau3", "tau4", "tau5", "tau6", "tau7"};
const std::vector<std::string> kLocal3Basis = {"e3",   "e4",   "e5",   "e6",   "tau1",
                                               "tau2", "tau3", "tau4", "tau5", "tau6"};

std::vector<BlockElement> lattice_units() {
  std::vector<BlockElement> out;
  for (std::size_t i = 0; i < BlockElement::kDim; ++i) out.push_back(BlockElement::lattice_unit(i));
  return out;
}

SymbolicEntry symbolic(const RationalVector& v, const std::vector<std::string>& labels) {
  SymbolicEntry e;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) e.emplace_back(v[i], labels[i]);
  return e;
}

RationalVector from_symbolic(const SymbolicEntry& e, const CornerAlgebra& c) {
  RationalVector v = zero_vector(c.rank());
  for (const auto& [coef, label] : e) v[c.index_of(label)] += coef;
  return v;
}

RelationSpec to_spec(const Quiver& q, const PathElement& x) {
  RelationSpec out;
  for (auto it = x.rbegin(); it != x.rend(); ++it) {
    PathTerm t{it->second, {}};
    for (auto a : it->first.arrows) t.arrows.push_back(q.arrows()[a].label);
    out.push_back(t);
  }
  return out;
}

std::set<std::string> relation_strings(const Quiver& q, const std::vector<PathElement>& rs) {
  std::set<std::string> out;
  for (const auto& r : rs) out.insert(to_string(q, r));
  return out;
}

}  // namespace

Workbench::Workbench(const std::filesystem::path& fixture_dir)
    : fixtures_(Fixtures::load(fixture_dir)), ring_(&BurnsideRing::s3()) {
  gamma_ = std::make_unique<Gamma>(*ring_, fixtures_.peirce);
  order_ = std::make_unique<LambdaOrder>(*ring_, *gamma_, fixtures_.blocks, fixtures_.matrix);
}

CornerAlgebra Workbench::corner_a() const {
  const auto& ca = fixtures_.blocks.corner_a;
  NamedBlocks idem = ordered(ca, {"a_{1,1}", "a_{2,2}", "a_{3,3}", "a_{4,4}"});
  return corner(lattice_units(), Ring::Q, idem, ordered(ca, fixtures_.corners.a_prime.basis));
}

CornerAlgebra Workbench::corner_local(unsigned long p) const {
  const auto& b = fixtures_.blocks;
  if (p == 2)
    return corner(order_->lattice_generators(), Ring::Z2, ordered(b.local2_idempotents, {"e3", "e4", "e5"}),
                  ordered(b.local2_corner, kLocal2Basis));
  if (p == 3)
    return corner(order_->lattice_generators(), Ring::Z3, ordered(b.local3_idempotents, {"e3", "e4", "e5", "e6"}),
                  ordered(b.local3_corner, kLocal3Basis));
  throw DomainError("corner_local: p must be 2 or 3");
}

Presentation Workbench::presentation(const std::string& name) const {
  return Presentation::from_fixture(fixtures_.presentation(name));
}

const std::vector<std::string>& Workbench::stages() {
  static const std::vector<std::string> s = {"subgroups", "ring",   "peirce", "gamma",
                                             "lambda",    "local2", "local3", "paths"};
  return s;
}

Report Workbench::run(const std::string& stage) const {
  if (stage == "all") {
    Report rep("all");
    for (const auto& s : stages()) rep.merge(run(s));
    return rep;
  }
  if (stage == "subgroups") return run_subgroups();
  if (stage == "ring") return verify_ring_axioms(*ring_);
  if (stage == "peirce") return verify_peirce(*ring_, fixtures_.peirce, *gamma_);
  if (stage == "gamma") return verify_gamma_morphism(*ring_, *gamma_);
  if (stage == "lambda") return verify_lambda_theorem(*order_, fixtures_.matrix);
  if (stage == "local2" || stage == "local3") {
    Report rep = verify_local_idempotents(*order_, fixtures_.blocks, fixtures_.corners, stage == "local2" ? 2 : 3);
    if (stage == "local2") rep.merge(verify_localization_split(*order_));
    return rep;
  }
  if (stage == "paths") return run_paths();
  throw DomainError("unknown stage " + stage);
}

Report Workbench::run_subgroups() const {
  Report rep("subgroups");
  const PermGroup g = s3::product_group();
  const auto classes = conjugacy_class_reps(g);
  const auto& named = s3::product_classes();
  bool labels = classes.size() == named.size();
  for (std::size_t i = 0; labels && i < classes.size(); ++i)
    labels = classes[i].label == named[i].label && classes[i].representative == named[i].group;
  rep.add("class_count", classes.size() == 22, std::to_string(classes.size()) + " classes of subgroups of S3xS3");
  rep.add("named_representatives", labels, "representatives and labels follow the fixed table");

  std::size_t total = 0;
  for (const auto& c : classes) total += c.class_size;
  const std::size_t subgroups = enumerate_subgroups(g).size();
  rep.add("class_sizes", total == subgroups,
          std::to_string(total) + " conjugates in total, " + std::to_string(subgroups) + " subgroups");

  const auto small = conjugacy_class_reps(s3::group());
  std::string names;
  for (const auto& c : small) names += (names.empty() ? "" : ",") + c.label;
  rep.add("s3_classes", small.size() == 4 && names == "V_0,V_1,V_4,V_5", "S3: " + names);
  return rep;
}

Report verify_corner_table(const CornerAlgebra& c, const SymbolicTable& expected, const std::vector<Erratum>& errata,
                           const std::string& stage) {
  Report rep(stage);
  bool basis_ok = expected.basis == c.labels;
  rep.add("basis", basis_ok, std::to_string(c.rank()) + " basis elements in fixture order");
  if (!basis_ok) return rep;
  std::size_t agree = 0, documented = 0;
  nlohmann::json diffs = nlohmann::json::array();
  for (std::size_t i = 0; i < c.rank(); ++i)
    for (std::size_t j = 0; j < c.rank(); ++j) {
      if (c.table[i][j] == from_symbolic(expected.table[i][j], c)) {
        ++agree;
        continue;
      }
      std::string cell = stage + "[" + std::to_string(i) + "][" + std::to_string(j) + "]";
      std::string got = to_string(symbolic(c.table[i][j], c.labels));
      if (has_erratum(errata, cell, got)) {
        ++documented;
        continue;
      }
      diffs.push_back({{"cell", cell},
                       {"row", c.labels[i]},
                       {"column", c.labels[j]},
                       {"computed", got},
                       {"fixture", to_string(expected.table[i][j])}});
    }
  const std::size_t cells = c.rank() * c.rank();
  rep.add("table", agree + documented == cells,
          std::to_string(agree) + "/" + std::to_string(cells) + " entries agree, " + std::to_string(documented) +
              " documented errata",
          diffs.empty() ? nlohmann::json(nullptr) : diffs);
  return rep;
}

Report Workbench::run_paths() const {
  Report rep("paths");

  const CornerAlgebra a = corner_a();
  rep.merge(verify_corner_table(a, fixtures_.corners.a_prime, fixtures_.corners.errata, "a_prime"));
  rep.merge(verify_presentation(a, presentation("a_prime")));

  for (unsigned long p : {2UL, 3UL}) {
    const std::string name = p == 2 ? "local2" : "local3";
    const CornerAlgebra c = corner_local(p);
    const Presentation pres = presentation(name);
    rep.merge(verify_presentation(c, pres));

    const Presentation red = reduce_mod_p(pres, p);
    const auto& fx = fixtures_.presentation(name);
    bool listed = false;
    for (const auto& [prime, rels] : fx.reductions) {
      if (prime != p) continue;
      std::vector<PathElement> want;
      for (const auto& r : rels) want.push_back(path_element(red.quiver, r, red.ring));
      listed = relation_strings(red.quiver, want) == relation_strings(red.quiver, red.relations);
    }
    rep.add(name + "/mod_" + std::to_string(p) + "_relations", listed,
            "reduced ideal matches the listed F_" + std::to_string(p) + " relations");
    rep.merge(verify_presentation(c.reduce_mod_p(p), red));

    // Dropping any single relation must leave a larger quotient.
    std::size_t caught = 0;
    for (std::size_t k = 0; k < pres.relations.size(); ++k) {
      Presentation weak = pres;
      weak.relations.erase(weak.relations.begin() + static_cast<long>(k));
      weak.long_relations.clear();
      weak.normal_forms.clear();
      Report r = verify_presentation(c, weak);
      const Check* rel = r.find("relations");
      const Check* rank = r.find("rank");
      caught += rel && rel->passed && rank && !rank->passed;
    }
    rep.add(name + "/dropped_relations", caught == pres.relations.size(),
            std::to_string(caught) + "/" + std::to_string(pres.relations.size()) +
                " single-relation deletions are caught by the rank check");
  }

  // Λ_(p) e_i ≅ Λ_(p) e3 for i = 1, 2 through u = E_{i3}, v = E_{3i}.
  bool morita = true;
  for (int i = 0; i < 2; ++i) {
    BlockElement u, v, ei, e3;
    u.s(i, 2) = 1;
    v.s(2, i) = 1;
    ei.s(i, i) = 1;
    e3.s(2, 2) = 1;
    morita = morita && u * v == ei && v * u == e3;
    for (unsigned long p : {2UL, 3UL}) morita = morita && localized_membership(u, p) && localized_membership(v, p);
  }
  rep.add("morita_witness", morita, "E_13 E_31 = e1, E_31 E_13 = e3 (and likewise for e2) inside Lambda_(2), Lambda_(3)");
  return rep;
}

void Workbench::emit_fixtures(const std::filesystem::path& dir) const {
  std::filesystem::create_directories(dir);
  const auto& src = fixtures_.dir;

  {
    nlohmann::json doc = load_fixture(src, "peirce.json");
    doc.erase("checksum");
    doc["h_basis"] = ring_->labels();
    nlohmann::json table = nlohmann::json::array();
    for (const auto& row : peirce_table(*ring_, fixtures_.peirce, *gamma_)) {
      nlohmann::json r = nlohmann::json::array();
      for (const auto& cell : row) r.push_back(to_json(cell));
      table.push_back(r);
    }
    doc["table"] = table;
    doc["errata"] = nlohmann::json::array();
    write_fixture(dir, "peirce.json", doc);
  }
  {
    nlohmann::json doc = load_fixture(src, "matrix_m.json");
    doc.erase("checksum");
    const IntMatrix m = order_->integral_representation();
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).get_si());
      rows.push_back(row);
    }
    doc["M"] = rows;
    // the condition module of 24 M⁻¹ mod 24, without the rows 24 e_i
    const Integer mod = fixtures_.matrix.modulus;
    IntMatrix scaled = to_integer(invert(order_->representation_matrix()).scaled(Rational(mod)));
    IntMatrix st(scaled.rows() + scaled.cols(), scaled.cols());
    for (std::size_t r = 0; r < scaled.rows(); ++r)
      for (std::size_t c = 0; c < scaled.cols(); ++c) st(r, c) = scaled(r, c);
    for (std::size_t c = 0; c < scaled.cols(); ++c) st(scaled.rows() + c, c) = mod;
    IntMatrix h = row_hnf(st);
    nlohmann::json sys = nlohmann::json::array();
    for (std::size_t r = 0; r < h.rows(); ++r) {
      nlohmann::json row = nlohmann::json::array();
      bool trivial = true;
      for (std::size_t c = 0; c < h.cols(); ++c) {
        row.push_back(h(r, c).get_si());
        if (h(r, c) != 0 && h(r, c) != mod) trivial = false;
      }
      if (!trivial) sys.push_back(row);
    }
    doc["reduced_system"] = {{"modulus", mod.get_si()}, {"rows", sys}};
    doc["errata"] = nlohmann::json::array();
    write_fixture(dir, "matrix_m.json", doc);
  }
  {
    nlohmann::json doc = load_fixture(src, "block_elements.json");
    doc.erase("checksum");
    write_fixture(dir, "block_elements.json", doc);
  }
  {
    nlohmann::json doc = load_fixture(src, "corner_tables.json");
    doc.erase("checksum");
    const CornerAlgebra a = corner_a();
    nlohmann::json table = nlohmann::json::array();
    for (const auto& row : a.table) {
      nlohmann::json r = nlohmann::json::array();
      for (const auto& cell : row) r.push_back(to_json(symbolic(cell, a.labels)));
      table.push_back(r);
    }
    doc["a_prime"]["table"] = table;

    // Γ = e5 Λ_(2) e5 in the b-basis
    const auto& gb = fixtures_.corners.gamma.basis;
    NamedBlocks bs = ordered(fixtures_.blocks.gamma_basis, gb);
    CornerAlgebra g;
    g.ring = Ring::Z2;
    g.labels = gb;
    for (const auto& [n, b] : bs) g.basis.push_back(b);
    nlohmann::json gt = nlohmann::json::array();
    for (const auto& [ni, bi] : bs) {
      nlohmann::json r = nlohmann::json::array();
      for (const auto& [nj, bj] : bs) r.push_back(to_json(symbolic(g.coordinates(bi * bj), gb)));
      gt.push_back(r);
    }
    doc["gamma"]["table"] = gt;
    std::vector<BlockElement> j;
    const IntMatrix& rad = fixtures_.corners.radical;
    for (std::size_t r = 0; r < rad.rows(); ++r) {
      BlockElement x;
      for (std::size_t c = 0; c < rad.cols(); ++c) x = x + Rational(rad(r, c)) * bs[c].second;
      j.push_back(x);
    }
    IntMatrix cubes(gb.size(), j.size() * j.size() * j.size());
    std::size_t col = 0;
    for (const auto& x : j)
      for (const auto& y : j)
        for (const auto& z : j) {
          RationalVector v = g.coordinates(x * y * z);
          for (std::size_t i = 0; i < v.size(); ++i) cubes(i, col) = v[i].get_num();
          ++col;
        }
    IntMatrix h = column_hnf(cubes);
    nlohmann::json cub = nlohmann::json::array();
    for (std::size_t c = 0; c < h.cols(); ++c) {
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t i = 0; i < h.rows(); ++i) row.push_back(h(i, c).get_si());
      cub.push_back(row);
    }
    doc["gamma"]["radical_cubed"] = cub;
    doc["errata"] = nlohmann::json::array();
    write_fixture(dir, "corner_tables.json", doc);
  }
  {
    nlohmann::json doc = load_fixture(src, "presentations.json");
    doc.erase("checksum");
    for (auto& p : doc["presentations"]) {
      Presentation pres = presentation(p["name"].get<std::string>());
      auto nf = quotient_basis(pres.quiver, pres.relations, pres.ring).paths;
      nlohmann::json forms = nlohmann::json::array();
      for (const auto& path : nf) forms.push_back(path_to_string(pres.quiver, path));
      p["normal_forms"] = forms;
      nlohmann::json reds = nlohmann::json::array();
      for (unsigned long prime : {2UL, 3UL}) {
        if (ring_prime(pres.ring) != prime) continue;
        Presentation red = reduce_mod_p(pres, prime);
        nlohmann::json rels = nlohmann::json::array();
        for (const auto& r : red.relations) rels.push_back(to_json(to_spec(red.quiver, r)));
        reds.push_back({{"prime", prime}, {"relations", rels}});
      }
      p["reductions"] = reds;
    }
    doc["errata"] = nlohmann::json::array();
    write_fixture(dir, "presentations.json", doc);
  }
}

}  // namespace bisetforge
