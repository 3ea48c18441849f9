#include "bisetforge/burnside_ring.hpp"

#include <bit>
#include <sstream>

#include "bisetforge/errors.hpp"

namespace bisetforge {

std::vector<std::int64_t> StructureTable::product(std::size_t i, std::size_t j) const {
  std::vector<std::int64_t> v(rank_);
  for (std::size_t k = 0; k < rank_; ++k) v[k] = (*this)(i, j, k);
  return v;
}

void StructureTable::set_product(std::size_t i, std::size_t j, const std::vector<std::int64_t>& v) {
  for (std::size_t k = 0; k < rank_; ++k) (*this)(i, j, k) = v.at(k);
}

nlohmann::json StructureTable::to_json(const std::vector<std::string>& labels) const {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < rank_; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < rank_; ++j) row.push_back(product(i, j));
    rows.push_back(row);
  }
  return {{"basis", labels}, {"table", rows}};
}

StructureTable structure_constants_by_orbits(const BisetContext& ctx, std::shared_ptr<const BisetContext> owner) {
  if (owner.get() != &ctx) throw DomainError("context owner mismatch");
  const std::size_t r = ctx.rank();
  std::vector<Biset> basis;
  for (std::size_t i = 0; i < r; ++i) basis.push_back(basis_biset(owner, i));
  StructureTable t(r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) t.set_product(i, j, decompose(tensor(basis[i], basis[j])));
  return t;
}

StructureTable structure_constants_by_double_cosets(const BisetContext& ctx) {
  const std::size_t r = ctx.rank();
  const std::size_t n = ctx.n();
  StructureTable t(r);
  for (std::size_t i = 0; i < r; ++i) {
    const PairMask u = ctx.classes()[i].representative;
    const std::uint32_t left = ctx.p2(u);
    for (std::size_t j = 0; j < r; ++j) {
      const PairMask v = ctx.classes()[j].representative;
      const std::uint32_t right = ctx.p1(v);
      std::vector<bool> covered(n, false);
      for (std::size_t x = 0; x < n; ++x) {
        if (covered[x]) continue;
        for (std::size_t a = 0; a < n; ++a) {
          if (!(left >> a & 1)) continue;
          for (std::size_t b = 0; b < n; ++b)
            if (right >> b & 1) covered[ctx.mul(ctx.mul(a, x), b)] = true;
        }
        ++t(i, j, ctx.class_of(ctx.star(u, ctx.conjugate_first(v, x))));
      }
    }
  }
  return t;
}

BurnsideRing::BurnsideRing(std::shared_ptr<const BisetContext> ctx)
    : ctx_(std::move(ctx)),
      table_(structure_constants_by_orbits(*ctx_, ctx_)),
      fast_table_(structure_constants_by_double_cosets(*ctx_)) {}

const BurnsideRing& BurnsideRing::s3() {
  static const BurnsideRing ring(BisetContext::s3());
  return ring;
}

std::vector<std::string> BurnsideRing::labels() const {
  std::vector<std::string> out;
  for (const auto& c : ctx_->classes()) out.push_back(c.label);
  return out;
}

BurnsideElement BurnsideRing::zero(Ring ring) const { return {ring, zero_vector(rank())}; }

BurnsideElement BurnsideRing::one(Ring ring) const { return basis(ctx_->identity_class(), ring); }

BurnsideElement BurnsideRing::basis(std::size_t i, Ring ring) const {
  if (i >= rank()) throw DomainError("basis index out of range");
  BurnsideElement x = zero(ring);
  x.coeffs[i] = 1;
  return x;
}

BurnsideElement BurnsideRing::make(const RationalVector& coeffs, Ring ring) const {
  if (coeffs.size() != rank()) throw DomainError("coefficient vector has length " + std::to_string(coeffs.size()));
  BurnsideElement x{ring, coeffs};
  for (auto& c : x.coeffs) c = normalize(c, ring);
  return x;
}

BurnsideElement BurnsideRing::change_ring(const BurnsideElement& x, Ring ring) const { return make(x.coeffs, ring); }

namespace {
void same_ring(const BurnsideElement& a, const BurnsideElement& b) {
  if (a.ring != b.ring) {
    throw DomainError("ring mismatch: " + std::string(ring_name(a.ring)) + " vs " + std::string(ring_name(b.ring)));
  }
  if (a.coeffs.size() != b.coeffs.size()) throw DomainError("elements of different rings");
}
}  // namespace

BurnsideElement BurnsideRing::add(const BurnsideElement& a, const BurnsideElement& b) const {
  same_ring(a, b);
  RationalVector v(a.coeffs.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeffs[i] + b.coeffs[i];
  return make(v, a.ring);
}

BurnsideElement BurnsideRing::sub(const BurnsideElement& a, const BurnsideElement& b) const {
  same_ring(a, b);
  RationalVector v(a.coeffs.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeffs[i] - b.coeffs[i];
  return make(v, a.ring);
}

BurnsideElement BurnsideRing::scale(const Rational& s, const BurnsideElement& a) const {
  RationalVector v(a.coeffs.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = s * a.coeffs[i];
  return make(v, a.ring);
}

BurnsideElement BurnsideRing::multiply(const BurnsideElement& a, const BurnsideElement& b) const {
  same_ring(a, b);
  const std::size_t r = rank();
  RationalVector v = zero_vector(r);
  for (std::size_t i = 0; i < r; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < r; ++j) {
      if (b.coeffs[j] == 0) continue;
      Rational ab = a.coeffs[i] * b.coeffs[j];
      for (std::size_t k = 0; k < r; ++k) {
        std::int64_t c = table_(i, j, k);
        if (c != 0) v[k] += ab * Rational(static_cast<long>(c));
      }
    }
  }
  return make(v, a.ring);
}

BurnsideElement BurnsideRing::parse(const std::string& text, Ring ring) const {
  RationalVector v = zero_vector(rank());
  std::vector<std::string> terms;
  std::string cur;
  int depth = 0;
  for (char ch : text) {
    if (ch == '{') ++depth;
    if (ch == '}') --depth;
    if (ch == ',' && depth == 0) {
      terms.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  terms.push_back(cur);
  for (const auto& term : terms) {
    auto colon = term.rfind(':');
    if (colon == std::string::npos) throw ParseError("expected label:coefficient in '" + term + "'");
    std::string label = term.substr(0, colon);
    while (!label.empty() && label.front() == ' ') label.erase(label.begin());
    while (!label.empty() && label.back() == ' ') label.pop_back();
    v[ctx_->index_of_label(label)] += parse_rational(term.substr(colon + 1));
  }
  return make(v, ring);
}

std::string BurnsideRing::format(const BurnsideElement& x) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < x.coeffs.size(); ++i) {
    if (x.coeffs[i] == 0) continue;
    os << (first ? "" : ",") << ctx_->classes()[i].label << ":" << x.coeffs[i].get_str();
    first = false;
  }
  return first ? "0" : os.str();
}

Report verify_ring_axioms(const BurnsideRing& ring) {
  Report rep("ring");
  const StructureTable& t = ring.table();
  const std::size_t n = ring.rank();
  const auto& classes = ring.context().classes();

  std::size_t agree = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) agree += t.product(i, j) == ring.double_coset_table().product(i, j);
  rep.add("oracles_agree", agree == n * n,
          std::to_string(agree) + "/" + std::to_string(n * n) + " products agree between orbit and double-coset tables");

  const std::size_t e = ring.context().identity_class();
  bool unit = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      std::int64_t want = i == k ? 1 : 0;
      unit = unit && t(e, i, k) == want && t(i, e, k) == want;
    }
  rep.add("identity", unit, classes[e].label + " is a two-sided identity");

  std::size_t bad = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t r = 0; r < n; ++r) {
          std::int64_t lhs = 0, rhs = 0;
          for (std::size_t m = 0; m < n; ++m) {
            lhs += t(i, j, m) * t(m, k, r);
            rhs += t(j, k, m) * t(i, m, r);
          }
          if (lhs != rhs) {
            ++bad;
            break;
          }
        }
  rep.add("associative", bad == 0, std::to_string(n * n * n - bad) + "/" + std::to_string(n * n * n) + " triples");

  // Burnside's lemma on X×Y under g·(x,y) = (x·g⁻¹, g·y) counts the points
  // of X ×_G Y without enumerating orbits.
  const std::size_t g = ring.context().n();
  std::vector<std::vector<std::int64_t>> right_fix(n, std::vector<std::int64_t>(g)), left_fix = right_fix;
  for (std::size_t i = 0; i < n; ++i) {
    Biset b = basis_biset(ring.context_ptr(), i);
    for (std::size_t x = 0; x < g; ++x)
      for (std::size_t pt = 0; pt < b.size(); ++pt) {
        right_fix[i][x] += b.right(pt, x) == pt;
        left_fix[i][x] += b.left(x, pt) == pt;
      }
  }
  bool nonneg = true, mass = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::int64_t total = 0, fixed = 0;
      for (std::size_t k = 0; k < n; ++k) {
        nonneg = nonneg && t(i, j, k) >= 0;
        total += t(i, j, k) * static_cast<std::int64_t>(classes[k].biset_size);
      }
      for (std::size_t x = 0; x < g; ++x) fixed += right_fix[i][x] * left_fix[j][x];
      mass = mass && total * static_cast<std::int64_t>(g) == fixed;
    }
  rep.add("nonnegative", nonneg, "structure constants are orbit counts");
  rep.add("orbit_mass", mass, "|X x_G Y| agrees with the Burnside-lemma count for all basis pairs");
  return rep;
}

}  // namespace bisetforge
