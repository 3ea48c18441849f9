#include "bisetforge/block_algebra.hpp"

#include "bisetforge/errors.hpp"
#include "bisetforge/linalg.hpp"

namespace bisetforge {

std::string DualPair::to_string() const {
  std::string out;
  auto term = [&](const Rational& k, const char* sym) {
    if (k == 0) return;
    std::string num = k.get_str();
    if (!out.empty() && k > 0) out += "+";
    if (*sym && (k == 1 || k == -1)) {
      out += (k < 0 ? "-" : "");
    } else {
      out += num;
    }
    out += sym;
  };
  term(a, "");
  term(b, "eta");
  term(c, "xi");
  return out.empty() ? "0" : out;
}

DualPair dual_multiply(const DualPair& p, const DualPair& q) { return p * q; }

bool is_unit(const DualPair& p, Ring ring) {
  for (const auto* k : {&p.a, &p.b, &p.c})
    if (!belongs_to(*k, ring) && !is_finite_field(ring)) return false;
  return bisetforge::is_unit(p.a, ring);
}

DualPair inverse(const DualPair& p) {
  if (p.a == 0) throw DomainError("element of the truncated polynomial ring has no inverse");
  Rational ai = 1 / p.a;
  return {ai, -ai * ai * p.b, -ai * ai * p.c};
}

BlockElement::BlockElement() : u(0), v(0), w(0), y(0), z{0, 0, 0} {
  s_.fill(Rational(0));
  t_.fill(Rational(0));
  x_.fill(Rational(0));
}

BlockElement BlockElement::one() {
  BlockElement e;
  for (int i = 0; i < 3; ++i) e.s(i, i) = 1;
  e.u = e.w = 1;
  e.z = DualPair::constant(1);
  return e;
}

Rational& BlockElement::at(std::string_view n) {
  auto digit = [&](std::size_t pos) -> int {
    if (pos >= n.size() || n[pos] < '1' || n[pos] > '3') throw DomainError("bad block coordinate '" + std::string(n) + "'");
    return n[pos] - '1';
  };
  if (n.size() == 3 && n[0] == 's') return s(digit(1), digit(2));
  if (n.size() == 2 && n[0] == 't') return t(digit(1));
  if (n.size() == 2 && n[0] == 'x') return x(digit(1));
  if (n == "u") return u;
  if (n == "v") return v;
  if (n == "w") return w;
  if (n == "y") return y;
  if (n == "z1") return z.a;
  if (n == "z2") return z.b;
  if (n == "z3") return z.c;
  throw DomainError("bad block coordinate '" + std::string(n) + "'");
}

const Rational& BlockElement::at(std::string_view n) const { return const_cast<BlockElement*>(this)->at(n); }

const std::array<std::string_view, BlockElement::kDim>& BlockElement::lattice_names() {
  static const std::array<std::string_view, kDim> names = {"s11", "s21", "s31", "s12", "s22", "s32", "s13", "s23",
                                                           "s33", "x1",  "x2",  "x3",  "u",   "y",   "w",   "t1",
                                                           "t2",  "t3",  "v",   "z1",  "z2",  "z3"};
  return names;
}

const std::array<std::string_view, BlockElement::kDim>& BlockElement::peirce_names() {
  static const std::array<std::string_view, kDim> names = {"s11", "s12", "s13", "s21", "s22", "s23", "s31", "s32",
                                                           "s33", "t1",  "t2",  "t3",  "u",   "v",   "w",   "x1",
                                                           "x2",  "x3",  "y",   "z1",  "z2",  "z3"};
  return names;
}

RationalVector BlockElement::lattice_coordinates() const {
  RationalVector out;
  for (auto n : lattice_names()) out.push_back(at(n));
  return out;
}

RationalVector BlockElement::peirce_coordinates() const {
  RationalVector out;
  for (auto n : peirce_names()) out.push_back(at(n));
  return out;
}

BlockElement BlockElement::from_lattice(const RationalVector& v) {
  if (v.size() != kDim) throw DomainError("block coordinate vector must have length 22");
  BlockElement b;
  for (std::size_t i = 0; i < kDim; ++i) b.at(lattice_names()[i]) = v[i];
  return b;
}

BlockElement BlockElement::from_peirce(const RationalVector& v) {
  if (v.size() != kDim) throw DomainError("block coordinate vector must have length 22");
  BlockElement b;
  for (std::size_t i = 0; i < kDim; ++i) b.at(peirce_names()[i]) = v[i];
  return b;
}

BlockElement BlockElement::lattice_unit(std::size_t i) {
  RationalVector v = zero_vector(kDim);
  v.at(i) = 1;
  return from_lattice(v);
}

BlockElement operator*(const BlockElement& a, const BlockElement& b) {
  BlockElement r;
  const Rational& a0 = a.z.a;   // constant term of z
  const Rational& b0 = b.z.a;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) r.s(i, j) += a.s(i, k) * b.s(k, j);
    for (int k = 0; k < 3; ++k) r.t(i) += a.s(i, k) * b.t(k);
    r.t(i) += a.t(i) * b0;
    for (int k = 0; k < 3; ++k) r.x(i) += a.x(k) * b.s(k, i);
    r.x(i) += a0 * b.x(i);
  }
  r.u = a.u * b.u;
  r.v = a.u * b.v + a.v * b0;
  r.w = a.w * b.w;
  r.y = a.y * b.u + a0 * b.y;
  Rational xt = 0;
  for (int k = 0; k < 3; ++k) xt += a.x(k) * b.t(k);
  const Rational yv = a.y * b.v;
  r.z = a.z * b.z + DualPair{0, xt - 12 * yv, yv};
  return r;
}

BlockElement block_multiply(const BlockElement& a, const BlockElement& b) { return a * b; }

BlockElement operator+(const BlockElement& a, const BlockElement& b) {
  auto va = a.lattice_coordinates(), vb = b.lattice_coordinates();
  for (std::size_t i = 0; i < va.size(); ++i) va[i] += vb[i];
  return BlockElement::from_lattice(va);
}

BlockElement operator-(const BlockElement& a, const BlockElement& b) {
  auto va = a.lattice_coordinates(), vb = b.lattice_coordinates();
  for (std::size_t i = 0; i < va.size(); ++i) va[i] -= vb[i];
  return BlockElement::from_lattice(va);
}

BlockElement operator*(const Rational& k, const BlockElement& a) {
  auto v = a.lattice_coordinates();
  for (auto& x : v) x *= k;
  return BlockElement::from_lattice(v);
}

bool operator==(const BlockElement& a, const BlockElement& b) {
  return a.lattice_coordinates() == b.lattice_coordinates();
}

bool BlockElement::is_zero() const { return bisetforge::is_zero(lattice_coordinates()); }

bool BlockElement::is_integral() const {
  for (const auto& q : lattice_coordinates())
    if (!bisetforge::is_integral(q)) return false;
  return true;
}

bool BlockElement::is_p_integral(unsigned long p) const {
  for (const auto& q : lattice_coordinates())
    if (!bisetforge::is_p_integral(q, p)) return false;
  return true;
}

RatMatrix BlockElement::left_multiplication_matrix() const {
  RatMatrix m(kDim, kDim);
  for (std::size_t j = 0; j < kDim; ++j) m.set_col(j, ((*this) * lattice_unit(j)).lattice_coordinates());
  return m;
}

BlockElement BlockElement::inverse() const {
  RatMatrix l = left_multiplication_matrix();
  auto sol = solve(l, BlockElement::one().lattice_coordinates());
  if (!sol) throw SingularMatrixError("block element is not a unit");
  BlockElement inv = from_lattice(*sol);
  if (inv * (*this) != one() || (*this) * inv != one()) throw SingularMatrixError("block element is not a unit");
  return inv;
}

nlohmann::json BlockElement::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  for (auto n : lattice_names()) {
    const Rational& q = at(n);
    if (q != 0) j[std::string(n)] = q.get_str();
  }
  return j;
}

BlockElement BlockElement::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw FixtureError("block element must be a JSON object");
  BlockElement b;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const auto& val = it.value();
    b.at(it.key()) = val.is_string() ? parse_rational(val.get<std::string>()) : Rational(val.get<long>());
  }
  return b;
}

std::vector<std::vector<std::string>> BlockElement::display() const {
  std::vector<std::vector<std::string>> rows(6, std::vector<std::string>(6, "0"));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) rows[i][j] = s(i, j).get_str();
    rows[i][5] = t(i).get_str();
    rows[5][i] = x(i).get_str();
  }
  rows[3][3] = u.get_str();
  rows[3][5] = v.get_str();
  rows[4][4] = w.get_str();
  rows[5][3] = y.get_str();
  rows[5][5] = z.to_string();
  return rows;
}

}  // namespace bisetforge
