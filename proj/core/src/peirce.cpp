#include "bisetforge/peirce.hpp"

#include <random>

#include "bisetforge/errors.hpp"
#include "bisetforge/linalg.hpp"

namespace bisetforge {

namespace {
std::string cell(std::size_t i, std::size_t j) {
  return "table[" + std::to_string(i) + "][" + std::to_string(j) + "]";
}

SymbolicEntry symbolic(const RationalVector& coords, const std::vector<std::string>& labels) {
  SymbolicEntry e;
  for (std::size_t k = 0; k < coords.size(); ++k)
    if (coords[k] != 0) e.emplace_back(coords[k], labels[k]);
  return e;
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-6, 6), den(1, 4);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}
}  // namespace

Gamma::Gamma(const BurnsideRing& ring, const PeirceFixture& fixture) : ring_(&ring) {
  const std::size_t n = BlockElement::kDim;
  if (fixture.basis22.size() != n || ring.rank() != n) throw DomainError("Peirce basis must have 22 elements");
  if (fixture.h_basis != ring.labels()) throw FixtureError("fixture H basis order differs from the ring basis order");
  p_ = RatMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    p_.set_col(j, fixture.basis22[j]);
    peirce_.push_back(ring.make(fixture.basis22[j], Ring::Q));
  }
  try {
    p_inv_ = invert(p_);
  } catch (const SingularMatrixError&) {
    throw VerificationError("Peirce basis vectors are linearly dependent; gamma is not bijective");
  }
}

BurnsideElement Gamma::gamma(const BlockElement& a) const {
  return ring_->make(p_ * a.peirce_coordinates(), Ring::Q);
}

RationalVector Gamma::peirce_coordinates(const BurnsideElement& x) const { return p_inv_ * x.coeffs; }

BlockElement Gamma::gamma_inv(const BurnsideElement& x) const {
  return BlockElement::from_peirce(peirce_coordinates(x));
}

BlockElement Gamma::block_basis(std::size_t i) {
  RationalVector v = zero_vector(BlockElement::kDim);
  v.at(i) = 1;
  return BlockElement::from_peirce(v);
}

Report verify_peirce(const BurnsideRing& ring, const PeirceFixture& fx, const Gamma& gamma) {
  Report rep("peirce");
  const auto one = ring.one();
  std::vector<BurnsideElement> idem;
  for (const auto& [name, v] : fx.idempotents) idem.push_back(ring.make(v, Ring::Q));

  {
    std::string bad;
    for (std::size_t i = 0; i < idem.size(); ++i)
      if (ring.multiply(idem[i], idem[i]) != idem[i]) bad += fx.idempotents[i].first + " ";
    rep.add("idempotent", bad.empty(), bad.empty() ? "e, g, h, eps2, eps3, eps4 are idempotent" : "not idempotent: " + bad);
  }
  {
    std::string bad;
    for (std::size_t i = 0; i < idem.size(); ++i)
      for (std::size_t j = 0; j < idem.size(); ++j)
        if (i != j && ring.multiply(idem[i], idem[j]) != ring.zero())
          bad += fx.idempotents[i].first + "*" + fx.idempotents[j].first + " ";
    rep.add("orthogonal", bad.empty(), bad.empty() ? "30 ordered products vanish" : "nonzero: " + bad);
  }
  {
    BurnsideElement sum = ring.zero();
    for (const auto& e : idem) sum = ring.add(sum, e);
    rep.add("unit_decomposition", sum == one, "e + g + h + eps2 + eps3 + eps4 = " + ring.format(sum));
  }
  {
    // eps1 := e + g + h is an idempotent and the named idempotents coincide
    // with the corresponding Peirce basis entries.
    BurnsideElement eps1 = ring.add(ring.add(idem[0], idem[1]), idem[2]);
    bool ok = ring.multiply(eps1, eps1) == eps1;
    for (const char* name : {"e", "g", "h", "eps2", "eps3", "eps4"})
      ok = ok && fx.basis22[fx.index_of(name)] == fx.idempotent(name);
    rep.add("eps1_and_basis_idempotents", ok, "eps1 = e + g + h idempotent; basis22 entries match named idempotents");
  }
  {
    // Each basis element sits in the Peirce component its label names.
    auto component = [&](const std::string& l) -> std::pair<std::string, std::string> {
      static const std::vector<std::string> peirce_idem = {"e", "g", "h", "eps2", "eps3", "eps4"};
      for (const auto& name : peirce_idem)
        if (l == name) return {name, name};
      if (l.rfind("b'", 0) == 0) return {"eps4", "eps4"};
      auto open = l.find('{'), comma = l.find(','), close = l.find('}');
      return {l.substr(open + 1, comma - open - 1), l.substr(comma + 1, close - comma - 1)};
    };
    std::string bad;
    for (std::size_t i = 0; i < fx.labels.size(); ++i) {
      auto [a, b] = component(fx.labels[i]);
      BurnsideElement ea = ring.make(fx.idempotent(a), Ring::Q), eb = ring.make(fx.idempotent(b), Ring::Q);
      const auto& x = gamma.peirce_element(i);
      if (ring.multiply(ring.multiply(ea, x), eb) != x) bad += fx.labels[i] + " ";
    }
    rep.add("peirce_components", bad.empty(), bad.empty() ? "every basis element b_{s,t} satisfies s b t = b" : "misplaced: " + bad);
  }
  {
    std::size_t matched = 0, documented = 0;
    nlohmann::json mismatches = nlohmann::json::array();
    for (std::size_t i = 0; i < fx.labels.size(); ++i) {
      for (std::size_t j = 0; j < fx.labels.size(); ++j) {
        auto prod = ring.multiply(gamma.peirce_element(i), gamma.peirce_element(j));
        RationalVector expect = zero_vector(ring.rank());
        for (const auto& [c, l] : fx.table.at(i).at(j)) {
          const auto& v = fx.basis22[fx.index_of(l)];
          for (std::size_t k = 0; k < expect.size(); ++k) expect[k] += c * v[k];
        }
        if (prod.coeffs == expect) {
          ++matched;
          continue;
        }
        const std::string computed = to_string(symbolic(gamma.peirce_coordinates(prod), fx.labels));
        if (has_erratum(fx.errata, cell(i, j), computed)) {
          ++documented;
          continue;
        }
        mismatches.push_back({{"cell", cell(i, j)},
                              {"row", fx.labels[i]},
                              {"column", fx.labels[j]},
                              {"fixture", to_string(fx.table[i][j])},
                              {"computed", computed}});
      }
    }
    rep.add("multiplication_table", mismatches.empty(),
            std::to_string(matched) + "/484 entries agree, " + std::to_string(documented) + " documented errata",
            mismatches.empty() ? nlohmann::json(nullptr) : mismatches);
  }
  {
    const auto& eps3 = idem[4];
    std::string bad;
    for (std::size_t i = 0; i < ring.rank(); ++i) {
      auto h = ring.basis(i);
      if (ring.multiply(eps3, h) != ring.multiply(h, eps3)) bad += ring.labels()[i] + " ";
    }
    rep.add("eps3_central", bad.empty(), bad.empty() ? "eps3 commutes with all 22 H basis elements" : "fails for " + bad);
  }
  return rep;
}

std::vector<std::vector<SymbolicEntry>> peirce_table(const BurnsideRing& ring, const PeirceFixture& fx,
                                                     const Gamma& gamma) {
  std::vector<std::vector<SymbolicEntry>> t(fx.labels.size());
  for (std::size_t i = 0; i < fx.labels.size(); ++i)
    for (std::size_t j = 0; j < fx.labels.size(); ++j)
      t[i].push_back(symbolic(
          gamma.peirce_coordinates(ring.multiply(gamma.peirce_element(i), gamma.peirce_element(j))), fx.labels));
  return t;
}

Report verify_gamma_morphism(const BurnsideRing& ring, const Gamma& gamma, std::uint64_t seed, std::size_t samples) {
  Report rep("gamma");
  const std::size_t n = BlockElement::kDim;
  rep.add("bijective", rank(gamma.change_of_basis()) == n &&
                           gamma.change_of_basis() * gamma.change_of_basis_inverse() == RatMatrix::identity(n),
          "22x22 change of basis inverted exactly");
  rep.add("unital", gamma.gamma(BlockElement::one()) == ring.one(), "gamma(1_A) = " + ring.format(gamma.gamma(BlockElement::one())));

  nlohmann::json bad = nlohmann::json::array();
  for (std::size_t i = 0; i < n; ++i) {
    const auto bi = Gamma::block_basis(i);
    for (std::size_t j = 0; j < n; ++j) {
      const auto bj = Gamma::block_basis(j);
      if (gamma.gamma(bi * bj) != ring.multiply(gamma.gamma(bi), gamma.gamma(bj))) {
        bad.push_back({{"left", BlockElement::peirce_names()[i]}, {"right", BlockElement::peirce_names()[j]}});
      }
    }
  }
  rep.add("multiplicative", bad.empty(), std::to_string(n * n - bad.size()) + "/484 block basis pairs",
          bad.empty() ? nlohmann::json(nullptr) : bad);

  std::mt19937_64 rng(seed);
  std::size_t ok = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    RationalVector v(n);
    for (auto& q : v) q = random_rational(rng);
    BlockElement a = BlockElement::from_lattice(v);
    RationalVector hv(n);
    for (auto& q : hv) q = random_rational(rng);
    BurnsideElement h = ring.make(hv, Ring::Q);
    if (gamma.gamma_inv(gamma.gamma(a)) == a && gamma.gamma(gamma.gamma_inv(h)) == h) ++ok;
  }
  rep.add("round_trip", ok == samples, std::to_string(ok) + "/" + std::to_string(samples) + " seeded elements (seed " +
                                           std::to_string(seed) + ")");
  return rep;
}

}  // namespace bisetforge
