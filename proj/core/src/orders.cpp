#include "bisetforge/orders.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "bisetforge/errors.hpp"
#include "bisetforge/linalg.hpp"

namespace bisetforge {

long Congruence::modulus() const {
  long m = 1;
  for (unsigned i = 0; i < exponent; ++i) m *= static_cast<long>(prime);
  return m;
}

Rational Congruence::evaluate(const BlockElement& a) const {
  Rational s = 0;
  for (const auto& [name, k] : form) s += Rational(k) * a.at(name);
  return s;
}

std::string Congruence::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [name, k] : form) {
    if (!first) os << (k < 0 ? " - " : " + ");
    else if (k < 0) os << "-";
    long ak = k < 0 ? -k : k;
    if (ak != 1) os << ak;
    os << name;
    first = false;
  }
  os << " = 0 mod " << modulus();
  return os.str();
}

const std::vector<Congruence>& lambda_congruences() {
  // The first printed line is the chain 2w - 2z1 =_8 z2 =_4 z3 =_4 0.
  static const std::vector<Congruence> list = {
      {{{"w", 2}, {"z1", -2}, {"z2", -1}}, 2, 3, 0},
      {{{"z2", 1}, {"z3", -1}}, 2, 2, 0},
      {{{"z3", 1}}, 2, 2, 0},
      {{{"x1", 1}}, 2, 2, 1},
      {{{"x2", 1}}, 2, 2, 2},
      {{{"x3", 1}}, 2, 2, 3},
      {{{"y", 1}}, 2, 1, 4},
      {{{"t1", 1}}, 2, 1, 5},
      {{{"t2", 1}}, 2, 1, 6},
      {{{"t3", 1}}, 2, 1, 7},
      {{{"v", 1}}, 2, 1, 8},
      {{{"x1", 1}}, 3, 1, 9},
      {{{"x2", 1}}, 3, 1, 10},
      {{{"x3", 1}}, 3, 1, 11},
      {{{"z2", 1}}, 3, 1, 12},
  };
  return list;
}

std::size_t displayed_line_count() {
  std::size_t n = 0;
  for (const auto& c : lambda_congruences()) n = std::max(n, c.display_line + 1);
  return n;
}

bool lambda_membership(const BlockElement& a) {
  if (!a.is_integral()) throw DomainError("lambda_membership: element is not integral");
  for (const auto& c : lambda_congruences()) {
    Integer val = c.evaluate(a).get_num();
    if (val % c.modulus() != 0) return false;
  }
  return true;
}

bool system_membership(const BlockElement& a, const IntMatrix& system, const Integer& modulus) {
  if (!a.is_integral()) throw DomainError("system_membership: element is not integral");
  if (system.cols() != BlockElement::kDim) throw DomainError("system_membership: expected 22 columns");
  RationalVector lam = a.lattice_coordinates();
  for (std::size_t r = 0; r < system.rows(); ++r) {
    Integer s = 0;
    for (std::size_t c = 0; c < system.cols(); ++c) s += system(r, c) * lam[c].get_num();
    if (s % modulus != 0) return false;
  }
  return true;
}

bool localized_membership(const BlockElement& a, unsigned long p) {
  if (p != 2 && p != 3) throw DomainError("localized_membership: only p = 2, 3 carry conditions");
  if (!a.is_p_integral(p)) throw DomainError("localized_membership: element is not p-integral");
  for (const auto& c : lambda_congruences()) {
    if (c.prime != p) continue;
    Rational val = c.evaluate(a);
    if (val != 0 && p_valuation(val, p) < static_cast<long>(c.exponent)) return false;
  }
  return true;
}

LambdaOrder::LambdaOrder(const BurnsideRing& ring, const Gamma& gamma, const BlockFixture& blocks,
                         const MatrixFixture& matrix)
    : ring_(&ring), gamma_(&gamma) {
  c_ = lookup(blocks.conjugators, "x1") * lookup(blocks.conjugators, "x2") * lookup(blocks.conjugators, "x3");
  c_inv_ = c_.inverse();
  const auto& labels = ring.labels();
  for (const auto& l : matrix.h_tilde) {
    auto it = std::find(labels.begin(), labels.end(), l);
    if (it == labels.end()) throw FixtureError("unknown H~ label " + l);
    h_tilde_.push_back(static_cast<std::size_t>(it - labels.begin()));
  }
  if (h_tilde_.size() != BlockElement::kDim) throw FixtureError("H~ must list 22 classes");
  std::vector<std::size_t> sorted = h_tilde_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw FixtureError("H~ repeats a class");
  m_ = RatMatrix(BlockElement::kDim, BlockElement::kDim);
  for (std::size_t j = 0; j < h_tilde_.size(); ++j)
    m_.set_col(j, delta(ring.basis(h_tilde_[j])).lattice_coordinates());
}

BlockElement LambdaOrder::delta(const BurnsideElement& y) const { return c_inv_ * gamma_->gamma_inv(y) * c_; }

BurnsideElement LambdaOrder::delta_inv(const BlockElement& a) const { return gamma_->gamma(c_ * a * c_inv_); }

bool LambdaOrder::representation_is_integral() const { return is_integral(m_); }

IntMatrix LambdaOrder::integral_representation() const {
  if (!representation_is_integral()) throw VerificationError("representation matrix has fractional entries");
  return to_integer(m_);
}

std::vector<BlockElement> LambdaOrder::lattice_generators() const {
  std::vector<BlockElement> out;
  for (std::size_t j = 0; j < m_.cols(); ++j) out.push_back(BlockElement::from_lattice(m_.col(j)));
  return out;
}

IntMatrix congruence_lattice(const IntMatrix& system, const Integer& modulus) {
  // U C V = D; λ = V μ is a solution iff d_i μ_i ≡ 0 mod m for every row i.
  SmithForm f = smith_normal_form(system);
  const std::size_t n = system.cols();
  IntMatrix scale(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Integer d = i < system.rows() ? f.D(i, i) : Integer(0);
    Integer g = gcd(d, modulus);
    scale(i, i) = modulus / g;
  }
  return column_hnf(f.V * scale);
}

IntMatrix displayed_system() {
  const auto& names = BlockElement::lattice_names();
  const auto& list = lambda_congruences();
  IntMatrix c(list.size(), names.size());
  for (std::size_t r = 0; r < list.size(); ++r) {
    long k = 24 / list[r].modulus();
    for (const auto& [name, coef] : list[r].form) {
      auto it = std::find(names.begin(), names.end(), name);
      c(r, static_cast<std::size_t>(it - names.begin())) += Integer(coef * k);
    }
  }
  return c;
}

Report verify_representation_matrix(const LambdaOrder& order, const MatrixFixture& fixture) {
  Report rep("matrix");
  const RatMatrix& m = order.representation_matrix();
  const auto& names = BlockElement::lattice_names();
  bool coords_ok = fixture.coordinates.size() == names.size();
  for (std::size_t i = 0; coords_ok && i < names.size(); ++i) coords_ok = fixture.coordinates[i] == names[i];
  rep.add("coordinate_order", coords_ok, "fixture rows follow the lattice coordinate order");
  rep.add("integral", order.representation_is_integral(), "every entry of M is an integer");

  nlohmann::json diffs = nlohmann::json::array();
  std::size_t mismatches = 0, documented = 0;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      Rational want(fixture.M(r, c));
      if (m(r, c) == want) continue;
      std::string cell = "M[" + std::to_string(r) + "][" + std::to_string(c) + "]";
      std::string got = bisetforge::to_string(m(r, c));
      if (has_erratum(fixture.errata, cell, got)) {
        ++documented;
        continue;
      }
      ++mismatches;
      diffs.push_back({{"cell", cell}, {"computed", got}, {"fixture", bisetforge::to_string(want)}});
    }
  rep.add("entries", mismatches == 0,
          std::to_string(484 - mismatches - documented) + "/484 agree, " + std::to_string(documented) +
              " documented errata",
          mismatches ? diffs : nlohmann::json(nullptr));
  return rep;
}

namespace {

std::string str(const Integer& z) { return z.get_str(); }

IntMatrix stacked_with_multiples(const IntMatrix& rows, const Integer& m) {
  IntMatrix out(rows.rows() + rows.cols(), rows.cols());
  for (std::size_t r = 0; r < rows.rows(); ++r)
    for (std::size_t c = 0; c < rows.cols(); ++c) out(r, c) = rows(r, c);
  for (std::size_t c = 0; c < rows.cols(); ++c) out(rows.rows() + c, c) = m;
  return out;
}

}  // namespace

Report verify_lambda_theorem(const LambdaOrder& order, const MatrixFixture& fixture) {
  Report rep("lambda");
  rep.merge(verify_representation_matrix(order, fixture));
  if (!order.representation_is_integral()) {
    rep.add("lattice", false, "M is not integral; the remaining checks need an integral image");
    return rep;
  }
  const IntMatrix m = order.integral_representation();
  const Integer det = determinant(m);
  const Integer absdet = abs(det);
  rep.add("injective", det != 0, "det M = " + str(det));

  const auto gens = order.lattice_generators();
  std::size_t in_disp = 0, in_sys = 0;
  for (const auto& g : gens) {
    in_disp += lambda_membership(g);
    in_sys += system_membership(g, fixture.reduced_system, fixture.modulus);
  }
  rep.add("columns_satisfy_congruences", in_disp == gens.size(),
          std::to_string(in_disp) + "/22 columns pass the displayed list");
  rep.add("columns_satisfy_system", in_sys == gens.size(),
          std::to_string(in_sys) + "/22 columns pass C x = 0 mod " + str(fixture.modulus));

  const IntMatrix image = column_hnf(m);
  const IntMatrix l_sys = congruence_lattice(fixture.reduced_system, fixture.modulus);
  const IntMatrix l_disp = congruence_lattice(displayed_system(), 24);
  rep.add("image_equals_system_lattice", image == l_sys, "HNF(M) against the lattice of the reduced system");
  rep.add("image_equals_displayed_lattice", image == l_disp, "HNF(M) against the lattice of the printed list");

  auto idx = lattice_index(m, IntMatrix::identity(22));
  Integer prod = 1;
  for (std::size_t i = 0; i < l_disp.cols(); ++i) prod *= l_disp(i, i);
  rep.add("index", idx && *idx == absdet && prod == absdet,
          "[A_Z : Lambda] = " + (idx ? str(*idx) : std::string("inf")) + ", |det M| = " + str(absdet));

  RatMatrix scaled = invert(order.representation_matrix()).scaled(Rational(fixture.modulus));
  bool inv_integral = is_integral(scaled);
  rep.add("scaled_inverse_integral", inv_integral, str(fixture.modulus) + " M^-1 is integral");
  if (inv_integral) {
    // the row module of 24 M⁻¹ mod 24 is the module of conditions cutting out Λ.
    IntMatrix a = row_hnf(stacked_with_multiples(to_integer(scaled), fixture.modulus));
    IntMatrix b = row_hnf(stacked_with_multiples(fixture.reduced_system, fixture.modulus));
    rep.add("reduced_system_row_module", a == b, "rows of C and of 24 M^-1 span the same module mod 24");
  }

  std::size_t closed = 0, bad_pairs = 0;
  nlohmann::json bad = nlohmann::json::array();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < gens.size(); ++j) {
      BlockElement p = gens[i] * gens[j];
      if (p.is_integral() && lambda_membership(p)) {
        ++closed;
      } else if (bad_pairs++ < 5) {
        bad.push_back({i, j});
      }
    }
  rep.add("closed_under_products", closed == 484, std::to_string(closed) + "/484 products of generators lie in Lambda",
          bad.empty() ? nlohmann::json(nullptr) : bad);

  const BurnsideRing& ring = order.ring();
  bool mult = true;
  for (std::size_t i = 0; i < 22 && mult; ++i)
    for (std::size_t j = 0; j < 22 && mult; ++j)
      mult = order.delta(ring.multiply(ring.basis(i), ring.basis(j))) ==
             order.delta(ring.basis(i)) * order.delta(ring.basis(j));
  rep.add("delta_multiplicative", mult, "delta(H_i H_j) = delta(H_i) delta(H_j)");
  rep.add("delta_unital", order.delta(ring.one()) == BlockElement::one(), "delta(1) = 1");

  bool rt = true;
  for (std::size_t i = 0; i < 22 && rt; ++i) rt = order.delta_inv(order.delta(ring.basis(i))) == ring.basis(i);
  rep.add("delta_round_trip", rt, "delta^-1 delta = id on the H basis");
  return rep;
}

namespace {

std::vector<RationalVector> corner_coords(const std::vector<BlockElement>& gens, const BlockElement& e,
                                          const std::vector<std::string>& names) {
  std::vector<RationalVector> out;
  for (const auto& g : gens) {
    BlockElement c = e * g * e;
    RationalVector v;
    for (const auto& n : names) v.push_back(c.at(n));
    out.push_back(v);
  }
  return out;
}

RationalVector coords_of(const BlockElement& a, const std::vector<std::string>& names) {
  RationalVector v;
  for (const auto& n : names) v.push_back(a.at(n));
  return v;
}

std::size_t span_rank(const std::vector<RationalVector>& vs) {
  if (vs.empty()) return 0;
  RatMatrix m(vs[0].size(), vs.size());
  for (std::size_t j = 0; j < vs.size(); ++j) m.set_col(j, vs[j]);
  return rank(m);
}

void check_idempotent_family(Report& rep, const NamedBlocks& idem, unsigned long p) {
  bool in_order = true, idempotent = true, orthogonal = true;
  BlockElement sum;
  for (std::size_t i = 0; i < idem.size(); ++i) {
    const BlockElement& e = idem[i].second;
    in_order = in_order && localized_membership(e, p);
    idempotent = idempotent && e * e == e;
    for (std::size_t j = 0; j < idem.size(); ++j)
      if (i != j) orthogonal = orthogonal && (e * idem[j].second).is_zero();
    sum = sum + e;
  }
  rep.add("idempotents_in_order", in_order, "each e_i lies in the localized order");
  rep.add("idempotent", idempotent, "e_i^2 = e_i");
  rep.add("orthogonal", orthogonal, "e_i e_j = 0 for i != j");
  rep.add("sum_is_one", sum == BlockElement::one(), "e_1 + ... + e_n = 1");
}

/// Coordinates of a in the Z_(p)-basis bs (over the listed entries).
std::optional<RationalVector> express(const BlockElement& a, const NamedBlocks& bs,
                                      const std::vector<std::string>& names) {
  RatMatrix m(names.size(), bs.size());
  for (std::size_t j = 0; j < bs.size(); ++j) m.set_col(j, coords_of(bs[j].second, names));
  return solve(m, coords_of(a, names));
}

SymbolicEntry to_symbolic(const RationalVector& coeffs, const std::vector<std::string>& labels) {
  SymbolicEntry out;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) out.emplace_back(coeffs[i], labels[i]);
  return out;
}

bool same_entry(const SymbolicEntry& a, const SymbolicEntry& b) {
  auto sorted = [](SymbolicEntry e) {
    std::sort(e.begin(), e.end(), [](const auto& l, const auto& r) { return l.second < r.second; });
    return e;
  };
  return sorted(a) == sorted(b);
}

void check_gamma(Report& rep, const LambdaOrder& order, const BlockFixture& blocks,
                 const CornerTablesFixture& corners) {
  const std::vector<std::string> names = {"w", "z1", "z2", "z3"};
  const BlockElement& e5 = lookup(blocks.local2_idempotents, "e5");
  const auto gens = order.lattice_generators();
  const auto corner = corner_coords(gens, e5, names);

  NamedBlocks bs;
  for (const auto& l : corners.gamma.basis) bs.emplace_back(l, lookup(blocks.gamma_basis, l));
  std::vector<RationalVector> bvecs;
  for (const auto& [l, b] : bs) bvecs.push_back(coords_of(b, names));
  rep.add("gamma_basis", same_local_span(corner, bvecs, 2) && span_rank(bvecs) == 4,
          "b1..b4 is a Z_(2)-basis of e5 Lambda_(2) e5");

  std::size_t agree = 0, documented = 0;
  nlohmann::json diffs = nlohmann::json::array();
  for (std::size_t i = 0; i < bs.size(); ++i)
    for (std::size_t j = 0; j < bs.size(); ++j) {
      auto c = express(bs[i].second * bs[j].second, bs, names);
      SymbolicEntry got = c ? to_symbolic(*c, corners.gamma.basis) : SymbolicEntry{};
      std::string cell = "gamma[" + std::to_string(i) + "][" + std::to_string(j) + "]";
      if (c && same_entry(got, corners.gamma.table[i][j])) {
        ++agree;
      } else if (c && has_erratum(corners.errata, cell, to_string(got))) {
        ++documented;
      } else {
        diffs.push_back({{"cell", cell}, {"computed", c ? to_string(got) : "outside span"},
                         {"fixture", to_string(corners.gamma.table[i][j])}});
      }
    }
  const std::size_t cells = bs.size() * bs.size();
  rep.add("gamma_table", agree + documented == cells,
          std::to_string(agree) + "/" + std::to_string(cells) + " products agree with the fixture",
          diffs.empty() ? nlohmann::json(nullptr) : diffs);

  // J and J³ from their generator rows in the b-basis.
  auto from_rows = [&](const IntMatrix& rows) {
    std::vector<BlockElement> out;
    for (std::size_t r = 0; r < rows.rows(); ++r) {
      BlockElement x;
      for (std::size_t c = 0; c < rows.cols(); ++c) x = x + Rational(rows(r, c)) * bs[c].second;
      out.push_back(x);
    }
    return out;
  };
  auto vecs = [&](const std::vector<BlockElement>& xs) {
    std::vector<RationalVector> out;
    for (const auto& x : xs) out.push_back(coords_of(x, names));
    return out;
  };
  const auto j_gens = from_rows(corners.radical);
  const auto jv = vecs(j_gens);
  bool ideal = true;
  for (const auto& jg : j_gens)
    for (const auto& [l, b] : bs)
      ideal = ideal && local_span_contains(jv, coords_of(b * jg, names), 2) &&
              local_span_contains(jv, coords_of(jg * b, names), 2);
  rep.add("radical_is_ideal", ideal, "Gamma J and J Gamma lie in J");

  std::vector<BlockElement> cubes;
  for (const auto& a : j_gens)
    for (const auto& b : j_gens)
      for (const auto& c : j_gens) cubes.push_back(a * b * c);
  const auto j3_fixture = vecs(from_rows(corners.radical_cubed));
  rep.add("radical_cubed", same_local_span(vecs(cubes), j3_fixture, 2), "J^3 = <8b1, 4b2, 2b3, 4b4>");
  std::vector<RationalVector> two_gamma;
  for (const auto& v : bvecs) {
    RationalVector w = v;
    for (auto& q : w) q *= 2;
    two_gamma.push_back(w);
  }
  bool nil = true;
  for (const auto& v : vecs(cubes)) nil = nil && local_span_contains(two_gamma, v, 2);
  rep.add("radical_nilpotent_mod_2", nil, "J^3 lies in 2 Gamma");

  bool contains_two = true;
  for (const auto& v : two_gamma) contains_two = contains_two && local_span_contains(jv, v, 2);
  IntMatrix jm = corners.radical;
  Integer quotient = abs(determinant(jm));
  rep.add("residue_field", contains_two && quotient == corners.residue_field_size,
          "2 Gamma in J and |Gamma/J| = " + str(quotient) + ", so Gamma/J = F_2");
}

void check_dual_numbers(Report& rep) {
  // a + bη + cξ with small 3-integral coefficients.
  const std::vector<Rational> vals = [] {
    std::vector<Rational> v;
    for (long n = -4; n <= 4; ++n)
      for (long d : {1L, 2L, 4L}) {
        Rational q(n, d);
        q.canonicalize();
        if (std::find(v.begin(), v.end(), q) == v.end()) v.push_back(q);
      }
    return v;
  }();
  std::size_t tested = 0;
  bool ok = true;
  for (const auto& a : vals)
    for (const auto& b : vals)
      for (long c = -2; c <= 2; ++c) {
        DualPair p{a, b, Rational(c)};
        bool criterion = is_unit(p, Ring::Z3);
        bool has_inverse = false;
        if (a != 0) {
          DualPair q = inverse(p);
          has_inverse = is_p_integral(q.a, 3) && is_p_integral(q.b, 3) && is_p_integral(q.c, 3) &&
                        p * q == DualPair::constant(1);
        }
        ok = ok && criterion == has_inverse;
        ++tested;
      }
  rep.add("dual_number_units", ok, std::to_string(tested) + " samples: unit iff constant term is a Z_(3) unit");

  // non-units are closed under addition and under multiplication by anything.
  bool ideal = true;
  for (const auto& a : vals)
    for (const auto& b : vals) {
      DualPair p{3 * a, b, 1}, q{3 * b, a, -1}, r{a, 1, b};
      ideal = ideal && !is_unit(p + q, Ring::Z3) && !is_unit(p * r, Ring::Z3);
    }
  rep.add("dual_number_local", ideal, "non-units form an ideal, so the corner is local");
}

}  // namespace

Report verify_local_idempotents(const LambdaOrder& order, const BlockFixture& blocks,
                                const CornerTablesFixture& corners, unsigned long p) {
  if (p != 2 && p != 3) throw DomainError("verify_local_idempotents: p must be 2 or 3");
  Report rep(p == 2 ? "local2" : "local3");
  const NamedBlocks& idem = p == 2 ? blocks.local2_idempotents : blocks.local3_idempotents;
  check_idempotent_family(rep, idem, p);

  const auto gens = order.lattice_generators();
  std::vector<std::string> all(BlockElement::lattice_names().begin(), BlockElement::lattice_names().end());
  std::size_t rank_one = 0, expected = 0;
  for (const auto& [name, e] : idem) {
    bool special = (p == 2 && name == "e5") || (p == 3 && name == "e6");
    if (special) continue;
    ++expected;
    auto c = corner_coords(gens, e, all);
    // e Λ e = Z_(p) e exactly.
    if (span_rank(c) == 1 && same_local_span(c, {coords_of(e, all)}, p)) ++rank_one;
  }
  rep.add("rank_one_corners", rank_one == expected,
          std::to_string(rank_one) + "/" + std::to_string(expected) + " corners e Lambda e equal Z_(p) e");

  if (p == 2) {
    check_gamma(rep, order, blocks, corners);
  } else {
    const BlockElement& e6 = lookup(idem, "e6");
    const std::vector<std::string> names = {"z1", "z2", "z3"};
    auto c = corner_coords(gens, e6, names);
    std::vector<RationalVector> want = {coords_of(e6, names), coords_of(lookup(blocks.local3_corner, "tau5"), names),
                                        coords_of(lookup(blocks.local3_corner, "tau6"), names)};
    rep.add("dual_number_corner", same_local_span(c, want, 3),
            "e6 Lambda_(3) e6 = Z_(3) e6 + Z_(3) 3eta + Z_(3) xi");
    check_dual_numbers(rep);
  }
  return rep;
}

Report verify_localization_split(const LambdaOrder& order, std::uint64_t seed, std::size_t samples) {
  Report rep("split");
  auto split = [](const BlockElement& a) {
    return lambda_membership(a) == (localized_membership(a, 2) && localized_membership(a, 3));
  };
  const auto gens = order.lattice_generators();
  bool images = true;
  for (const auto& g : gens) images = images && split(g) && lambda_membership(g);
  rep.add("delta_images", images, "all 22 delta(H~_j) lie in Lambda, Lambda_(2) and Lambda_(3)");

  // A third of the samples lie in Λ, a third are one coordinate off, the rest
  // are unconstrained.
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> small(-3, 3), wide(-30, 30), coord(0, BlockElement::kDim - 1);
  const RatMatrix& m = order.representation_matrix();
  std::size_t agree = 0, members = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    RationalVector lam = zero_vector(BlockElement::kDim);
    if (s % 3 == 2) {
      for (auto& x : lam) x = wide(rng);
    } else {
      RationalVector q(BlockElement::kDim);
      for (auto& x : q) x = small(rng);
      lam = m * q;
      if (s % 3 == 1) lam[coord(rng)] += small(rng);
    }
    BlockElement a = BlockElement::from_lattice(lam);
    agree += split(a);
    members += lambda_membership(a);
  }
  rep.add("random_blocks", agree == samples,
          std::to_string(agree) + "/" + std::to_string(samples) + " agree (seed " + std::to_string(seed) + ", " +
              std::to_string(members) + " members)");
  return rep;
}

}  // namespace bisetforge
