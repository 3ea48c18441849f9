#include "bisetforge/path_algebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "bisetforge/errors.hpp"
#include "bisetforge/linalg.hpp"

namespace bisetforge {

Quiver::Quiver(std::vector<std::string> vertices,
               std::vector<std::tuple<std::string, std::string, std::string>> arrows)
    : vertices_(std::move(vertices)) {
  std::set<std::string> seen;
  for (const auto& v : vertices_)
    if (!seen.insert(v).second) throw DomainError("duplicate quiver label " + v);
  for (const auto& [label, src, tgt] : arrows) {
    if (!seen.insert(label).second) throw DomainError("duplicate quiver label " + label);
    if (!has_vertex(src) || !has_vertex(tgt)) throw DomainError("arrow " + label + " has an unknown endpoint");
    arrows_.push_back({label, vertex_index(src), vertex_index(tgt)});
  }
}

bool Quiver::has_vertex(const std::string& label) const {
  return std::find(vertices_.begin(), vertices_.end(), label) != vertices_.end();
}

std::size_t Quiver::vertex_index(const std::string& label) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), label);
  if (it == vertices_.end()) throw DomainError("unknown vertex " + label);
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t Quiver::arrow_index(const std::string& label) const {
  for (std::size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].label == label) return i;
  throw DomainError("unknown arrow " + label);
}

bool operator<(const Path& a, const Path& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  if (a.arrows != b.arrows) return a.arrows < b.arrows;
  if (a.source != b.source) return a.source < b.source;
  return a.target < b.target;
}

std::optional<Path> compose(const Quiver& q, const Path& a, const Path& b) {
  (void)q;
  if (a.target != b.source) return std::nullopt;
  Path out{a.source, b.target, a.arrows};
  out.arrows.insert(out.arrows.end(), b.arrows.begin(), b.arrows.end());
  return out;
}

Path arrow_path(const Quiver& q, std::size_t arrow) {
  const auto& a = q.arrows().at(arrow);
  return {a.source, a.target, {arrow}};
}

std::string path_to_string(const Quiver& q, const Path& p) {
  if (p.trivial()) return q.vertices()[p.source];
  std::string out;
  for (std::size_t i = 0; i < p.arrows.size(); ++i) {
    if (i) out += ' ';
    out += q.arrows()[p.arrows[i]].label;
  }
  return out;
}

Path parse_path(const Quiver& q, const std::string& text) {
  std::istringstream is(text);
  std::vector<std::string> words;
  for (std::string w; is >> w;) words.push_back(w);
  if (words.empty()) throw ParseError("empty path");
  if (words.size() == 1 && q.has_vertex(words[0])) return Path::vertex(q.vertex_index(words[0]));
  Path p = arrow_path(q, q.arrow_index(words[0]));
  for (std::size_t i = 1; i < words.size(); ++i) {
    auto next = compose(q, p, arrow_path(q, q.arrow_index(words[i])));
    if (!next) throw DomainError("path " + text + " is not composable");
    p = *next;
  }
  return p;
}

std::string to_string(const Quiver& q, const PathElement& x) {
  if (x.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = x.rbegin(); it != x.rend(); ++it) {
    Rational c = it->second;
    if (!first) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    Rational a = abs(c);
    if (a != 1) out += to_string(a) + "*";
    out += path_to_string(q, it->first);
    first = false;
  }
  return out;
}

namespace {

void accumulate(PathElement& x, const Path& p, const Rational& c, Ring ring) {
  Rational& slot = x[p];
  slot = normalize(slot + c, ring);
  if (slot == 0) x.erase(p);
}

Path subpath(const Quiver& q, const Path& p, std::size_t from, std::size_t to) {
  if (from == to) {
    std::size_t v = from == 0 ? p.source : q.arrows()[p.arrows[from - 1]].target;
    return Path::vertex(v);
  }
  Path out{q.arrows()[p.arrows[from]].source, q.arrows()[p.arrows[to - 1]].target, {}};
  out.arrows.assign(p.arrows.begin() + static_cast<long>(from), p.arrows.begin() + static_cast<long>(to));
  return out;
}

/// u · x · w for paths u, w and a combination x with matching endpoints.
PathElement sandwich(const Quiver& q, const Path& u, const PathElement& x, const Path& w, const Rational& k,
                     Ring ring) {
  PathElement out;
  for (const auto& [p, c] : x) {
    auto left = compose(q, u, p);
    if (!left) continue;
    auto full = compose(q, *left, w);
    if (!full) continue;
    accumulate(out, *full, k * c, ring);
  }
  return out;
}

PathElement difference(const PathElement& a, const PathElement& b, Ring ring) {
  PathElement out = a;
  for (const auto& [p, c] : b) accumulate(out, p, -c, ring);
  return out;
}

}  // namespace

PathElement path_element(const Quiver& q, const RelationSpec& spec, Ring ring) {
  PathElement out;
  std::optional<std::pair<std::size_t, std::size_t>> ends;
  for (const auto& term : spec) {
    if (term.arrows.empty()) throw DomainError("relation term without arrows");
    std::string text;
    for (const auto& a : term.arrows) text += (text.empty() ? "" : " ") + a;
    Path p = parse_path(q, text);
    if (ends && (ends->first != p.source || ends->second != p.target))
      throw DomainError("relation mixes paths with different endpoints");
    ends = std::make_pair(p.source, p.target);
    accumulate(out, p, normalize(term.coef, ring), ring);
  }
  return out;
}

RewritingSystem::RewritingSystem(const Quiver& q, const std::vector<PathElement>& relations, Ring ring,
                                 std::size_t bound)
    : q_(&q), ring_(ring), bound_(bound) {
  for (const auto& r : relations) {
    if (r.empty()) continue;
    const auto& [head, lead] = *r.rbegin();
    if (head.trivial()) throw DomainError("relation leading term is a vertex");
    if (!is_unit(lead, ring)) throw DomainError("relation leading coefficient is not a unit");
    Rational inv = normalize(Rational(-1) / lead, ring);
    Rule rule{head, {}};
    for (const auto& [p, c] : r)
      if (!(p == head)) accumulate(rule.tail, p, inv * c, ring);
    rules_.push_back(std::move(rule));
  }
  check_ambiguities();
}

std::optional<std::pair<std::size_t, std::size_t>> RewritingSystem::find_head(const Path& p) const {
  for (std::size_t r = 0; r < rules_.size(); ++r) {
    const auto& h = rules_[r].head.arrows;
    if (h.size() > p.arrows.size()) continue;
    auto it = std::search(p.arrows.begin(), p.arrows.end(), h.begin(), h.end());
    if (it != p.arrows.end()) return std::make_pair(r, static_cast<std::size_t>(it - p.arrows.begin()));
  }
  return std::nullopt;
}

bool RewritingSystem::is_irreducible(const Path& p) const { return !find_head(p); }

PathElement RewritingSystem::reduce(const PathElement& x) const {
  PathElement cur = x;
  PathElement done;
  // Rewrite the deglex-largest reducible term first; tails are smaller, so
  // this terminates.
  while (!cur.empty()) {
    auto it = std::prev(cur.end());
    Path p = it->first;
    Rational c = it->second;
    cur.erase(it);
    auto hit = find_head(p);
    if (!hit) {
      accumulate(done, p, c, ring_);
      continue;
    }
    const Rule& rule = rules_[hit->first];
    Path u = subpath(*q_, p, 0, hit->second);
    Path w = subpath(*q_, p, hit->second + rule.head.length(), p.length());
    for (const auto& [tp, tc] : sandwich(*q_, u, rule.tail, w, c, ring_)) accumulate(cur, tp, tc, ring_);
  }
  return done;
}

void RewritingSystem::check_ambiguities() {
  const Quiver& q = *q_;
  for (std::size_t i = 0; i < rules_.size(); ++i)
    for (std::size_t j = 0; j < rules_.size(); ++j) {
      const Path& h1 = rules_[i].head;
      const Path& h2 = rules_[j].head;
      // overlaps: a suffix of h1 equals a prefix of h2
      for (std::size_t k = 1; k < std::min(h1.length(), h2.length()); ++k) {
        if (!std::equal(h1.arrows.end() - static_cast<long>(k), h1.arrows.end(), h2.arrows.begin())) continue;
        Path left = subpath(q, h1, 0, h1.length() - k);
        Path right = subpath(q, h2, k, h2.length());
        PathElement a = reduce(sandwich(q, Path::vertex(h1.source), rules_[i].tail, right, 1, ring_));
        PathElement b = reduce(sandwich(q, left, rules_[j].tail, Path::vertex(h2.target), 1, ring_));
        if (!difference(a, b, ring_).empty())
          unresolved_.push_back(path_to_string(q, h1) + " / " + path_to_string(q, h2) + " overlap " +
                                std::to_string(k));
      }
      // inclusions: h2 inside h1
      if (i == j || h2.length() > h1.length()) continue;
      auto it = std::search(h1.arrows.begin(), h1.arrows.end(), h2.arrows.begin(), h2.arrows.end());
      if (it == h1.arrows.end()) continue;
      std::size_t pos = static_cast<std::size_t>(it - h1.arrows.begin());
      Path u = subpath(q, h1, 0, pos);
      Path w = subpath(q, h1, pos + h2.length(), h1.length());
      PathElement a = reduce(rules_[i].tail);
      PathElement b = reduce(sandwich(q, u, rules_[j].tail, w, 1, ring_));
      if (!difference(a, b, ring_).empty())
        unresolved_.push_back(path_to_string(q, h1) + " contains " + path_to_string(q, h2));
    }
}

std::vector<Path> RewritingSystem::normal_forms() const {
  std::vector<Path> out, layer;
  for (std::size_t v = 0; v < q_->vertices().size(); ++v) layer.push_back(Path::vertex(v));
  for (std::size_t len = 0; !layer.empty(); ++len) {
    if (len >= bound_) throw NonTerminationError("irreducible paths of length " + std::to_string(len) +
                                                 " remain; the quotient is not finite within the bound");
    out.insert(out.end(), layer.begin(), layer.end());
    std::vector<Path> next;
    for (const auto& p : layer)
      for (std::size_t a = 0; a < q_->arrows().size(); ++a) {
        auto ext = compose(*q_, p, arrow_path(*q_, a));
        if (ext && is_irreducible(*ext)) next.push_back(*ext);
      }
    layer = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

QuotientBasis quotient_basis(const Quiver& q, const std::vector<PathElement>& relations, Ring ring,
                             std::size_t bound) {
  RewritingSystem rs(q, relations, ring, bound);
  QuotientBasis out;
  out.paths = rs.normal_forms();
  out.rank = out.paths.size();
  out.confluent = rs.confluent();
  return out;
}

std::size_t CornerAlgebra::index_of(const std::string& label) const {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw DomainError("unknown corner basis element " + label);
  return static_cast<std::size_t>(it - labels.begin());
}

RationalVector CornerAlgebra::basis_vector(std::size_t i) const {
  RationalVector v = zero_vector(rank());
  v.at(i) = 1;
  return v;
}

RationalVector CornerAlgebra::multiply(const RationalVector& a, const RationalVector& b) const {
  RationalVector out = zero_vector(rank());
  for (std::size_t i = 0; i < rank(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < rank(); ++j) {
      if (b[j] == 0) continue;
      Rational k = a[i] * b[j];
      for (std::size_t m = 0; m < rank(); ++m) out[m] += k * table[i][j][m];
    }
  }
  for (auto& x : out) x = normalize(x, ring);
  return out;
}

RationalVector CornerAlgebra::add(const RationalVector& a, const RationalVector& b) const {
  RationalVector out(rank());
  for (std::size_t i = 0; i < rank(); ++i) out[i] = normalize(a[i] + b[i], ring);
  return out;
}

RationalVector CornerAlgebra::scale(const Rational& k, const RationalVector& a) const {
  RationalVector out(rank());
  for (std::size_t i = 0; i < rank(); ++i) out[i] = normalize(k * a[i], ring);
  return out;
}

RationalVector CornerAlgebra::coordinates(const BlockElement& a) const {
  RatMatrix m(BlockElement::kDim, rank());
  for (std::size_t j = 0; j < rank(); ++j) m.set_col(j, basis[j].lattice_coordinates());
  auto sol = solve(m, a.lattice_coordinates());
  if (!sol) throw DomainError("element is outside the corner");
  for (auto& x : *sol) x = normalize(x, ring);
  return *sol;
}

CornerAlgebra CornerAlgebra::reduce_mod_p(unsigned long p) const {
  Ring target = p == 2 ? Ring::F2 : p == 3 ? Ring::F3 : throw DomainError("reduction only at p = 2, 3");
  if (ring_prime(ring) != p || is_finite_field(ring)) throw DomainError("reduce_mod_p needs a Z_(p) corner");
  CornerAlgebra out = *this;
  out.ring = target;
  for (auto& row : out.table)
    for (auto& cell : row)
      for (auto& x : cell) x = normalize(x, target);
  for (auto& x : out.unit) x = normalize(x, target);
  return out;
}

namespace {

std::vector<RationalVector> lattice_vectors(const std::vector<BlockElement>& xs) {
  std::vector<RationalVector> out;
  for (const auto& x : xs) out.push_back(x.lattice_coordinates());
  return out;
}

std::size_t rank_of(const std::vector<RationalVector>& vs, std::size_t dim) {
  if (vs.empty()) return 0;
  RatMatrix m(dim, vs.size());
  for (std::size_t j = 0; j < vs.size(); ++j) m.set_col(j, vs[j]);
  return rank(m);
}

bool in_span(const std::vector<RationalVector>& gens, const RationalVector& v, Ring ring) {
  if (ring == Ring::Q) {
    auto g = gens;
    std::size_t r = rank_of(g, v.size());
    g.push_back(v);
    return rank_of(g, v.size()) == r;
  }
  return local_span_contains(gens, v, ring_prime(ring));
}

}  // namespace

CornerAlgebra corner(const std::vector<BlockElement>& ambient_generators, Ring ring, const NamedBlocks& idempotents,
                     const NamedBlocks& basis) {
  if (is_finite_field(ring)) throw DomainError("corner: take the corner over Z_(p), then reduce");
  const auto amb = lattice_vectors(ambient_generators);
  BlockElement e;
  for (std::size_t i = 0; i < idempotents.size(); ++i) {
    const auto& [name, f] = idempotents[i];
    if (f * f != f) throw DomainError("corner: " + name + " is not idempotent");
    if (!in_span(amb, f.lattice_coordinates(), ring)) throw DomainError("corner: " + name + " is outside the order");
    for (std::size_t j = 0; j < i; ++j)
      if (!(f * idempotents[j].second).is_zero() || !(idempotents[j].second * f).is_zero())
        throw DomainError("corner: " + name + " and " + idempotents[j].first + " are not orthogonal");
    e = e + f;
  }
  std::vector<RationalVector> gens;
  for (const auto& g : ambient_generators) gens.push_back((e * g * e).lattice_coordinates());

  CornerAlgebra c;
  c.ring = ring;
  if (basis.empty()) {
    // echelon basis of the corner lattice (a Q-basis when ring = Q)
    Integer den = common_denominator(gens);
    IntMatrix m(BlockElement::kDim, gens.size());
    for (std::size_t j = 0; j < gens.size(); ++j)
      for (std::size_t i = 0; i < BlockElement::kDim; ++i) m(i, j) = Rational(gens[j][i] * den).get_num();
    IntMatrix h = column_hnf(m);
    for (std::size_t j = 0; j < h.cols(); ++j) {
      RationalVector v(BlockElement::kDim);
      for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] = Rational(h(i, j)) / Rational(den);
        v[i].canonicalize();
      }
      c.labels.push_back("c" + std::to_string(j + 1));
      c.basis.push_back(BlockElement::from_lattice(v));
    }
  } else {
    for (const auto& [name, b] : basis) {
      if (e * b * e != b) throw DomainError("corner: " + name + " is not in the corner");
      c.labels.push_back(name);
      c.basis.push_back(b);
    }
  }
  const auto bv = lattice_vectors(c.basis);
  if (rank_of(bv, BlockElement::kDim) != bv.size()) throw DomainError("corner: basis is linearly dependent");
  for (const auto& g : gens)
    if (!in_span(bv, g, ring)) throw DomainError("corner: basis does not span the corner");
  for (const auto& b : bv)
    if (!in_span(gens, b, ring)) throw DomainError("corner: basis element outside the order");

  c.table.assign(c.rank(), std::vector<RationalVector>(c.rank()));
  for (std::size_t i = 0; i < c.rank(); ++i)
    for (std::size_t j = 0; j < c.rank(); ++j) c.table[i][j] = c.coordinates(c.basis[i] * c.basis[j]);
  c.unit = c.coordinates(e);
  return c;
}

Presentation Presentation::from_fixture(const PresentationFixture& f) {
  Presentation p;
  p.name = f.name;
  p.ring = parse_ring(f.ring);
  p.quiver = Quiver(f.vertices, f.arrows);
  for (const auto& r : f.relations) p.relations.push_back(path_element(p.quiver, r, p.ring));
  for (const auto& r : f.long_relations) p.long_relations.push_back(path_element(p.quiver, r, p.ring));
  p.assignment = f.assignment;
  for (const auto& [name, terms] : f.identities) p.identities.emplace_back(name, path_element(p.quiver, terms, p.ring));
  p.normal_forms = f.normal_forms;
  return p;
}

Presentation reduce_mod_p(const Presentation& pres, unsigned long p) {
  Ring target = p == 2 ? Ring::F2 : p == 3 ? Ring::F3 : throw DomainError("reduction only at p = 2, 3");
  auto reduce = [&](const PathElement& x) {
    PathElement out;
    for (const auto& [path, c] : x) accumulate(out, path, normalize(c, target), target);
    return out;
  };
  Presentation out = pres;
  out.name = pres.name + "/" + std::to_string(p);
  out.ring = target;
  out.relations.clear();
  out.long_relations.clear();
  for (const auto& r : pres.relations)
    if (auto x = reduce(r); !x.empty()) out.relations.push_back(x);
  for (const auto& r : pres.long_relations)
    if (auto x = reduce(r); !x.empty()) out.long_relations.push_back(x);
  for (auto& [name, x] : out.identities) x = reduce(x);
  return out;
}

RationalVector evaluate(const CornerAlgebra& c, const Presentation& pres, const PathElement& x) {
  const Quiver& q = pres.quiver;
  auto image = [&](const std::string& label) {
    auto it = pres.assignment.find(label);
    if (it == pres.assignment.end()) throw DomainError("no image assigned to " + label);
    return c.basis_vector(c.index_of(it->second));
  };
  RationalVector out = zero_vector(c.rank());
  for (const auto& [p, coef] : x) {
    RationalVector v = p.trivial() ? image(q.vertices()[p.source]) : image(q.arrows()[p.arrows[0]].label);
    for (std::size_t i = 1; i < p.arrows.size(); ++i) v = c.multiply(v, image(q.arrows()[p.arrows[i]].label));
    out = c.add(out, c.scale(coef, v));
  }
  return out;
}

Report verify_presentation(const CornerAlgebra& c, const Presentation& pres, std::size_t bound) {
  Report rep(pres.name);
  const Quiver& q = pres.quiver;
  if (c.ring != pres.ring) throw DomainError("presentation and corner live over different rings");
  auto single = [](const Path& p) {
    PathElement e;
    e[p] = 1;
    return e;
  };
  const std::size_t nv = q.vertices().size();
  std::vector<RationalVector> vert(nv);
  for (std::size_t v = 0; v < nv; ++v) vert[v] = evaluate(c, pres, single(Path::vertex(v)));

  bool idem = true;
  RationalVector sum = zero_vector(c.rank());
  for (std::size_t v = 0; v < nv; ++v) {
    for (std::size_t w = 0; w < nv; ++w) {
      RationalVector prod = c.multiply(vert[v], vert[w]);
      idem = idem && (v == w ? prod == vert[v] : is_zero(prod));
    }
    sum = c.add(sum, vert[v]);
  }
  rep.add("vertex_idempotents", idem, "vertex images are orthogonal idempotents");
  rep.add("unit", sum == c.unit, "vertex images sum to the corner unit");

  bool placed = true, composable = true;
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    const auto& arr = q.arrows()[a];
    RationalVector img = evaluate(c, pres, single(arrow_path(q, a)));
    placed = placed && c.multiply(c.multiply(vert[arr.source], img), vert[arr.target]) == img;
    for (std::size_t v = 0; v < nv; ++v) {
      if (v != arr.source) composable = composable && is_zero(c.multiply(vert[v], img));
      if (v != arr.target) composable = composable && is_zero(c.multiply(img, vert[v]));
    }
    for (std::size_t b = 0; b < q.arrows().size(); ++b)
      if (arr.target != q.arrows()[b].source)
        composable = composable && is_zero(c.multiply(img, evaluate(c, pres, single(arrow_path(q, b)))));
  }
  rep.add("arrow_images", placed, "each arrow image lies in e_source C e_target");
  rep.add("composability", composable, "non-composable products map to zero");

  std::vector<std::string> failing;
  for (const auto& r : pres.relations)
    if (!is_zero(evaluate(c, pres, r))) failing.push_back(to_string(q, r));
  rep.add("relations", failing.empty(),
          std::to_string(pres.relations.size() - failing.size()) + "/" + std::to_string(pres.relations.size()) +
              " relations vanish",
          failing.empty() ? nlohmann::json(nullptr) : nlohmann::json(failing));

  std::vector<std::string> bad_ids;
  for (const auto& [name, x] : pres.identities)
    if (evaluate(c, pres, x) != c.basis_vector(c.index_of(name))) bad_ids.push_back(name);
  if (!pres.identities.empty())
    rep.add("identities", bad_ids.empty(), std::to_string(pres.identities.size()) + " named identities",
            bad_ids.empty() ? nlohmann::json(nullptr) : nlohmann::json(bad_ids));

  std::optional<RewritingSystem> rs;
  try {
    rs.emplace(q, pres.relations, pres.ring, bound);
  } catch (const DomainError& e) {
    rep.add("rewriting", false, e.what());
    return rep;
  }
  rep.add("confluent", rs->confluent(), "all head ambiguities resolve",
          rs->confluent() ? nlohmann::json(nullptr) : nlohmann::json(rs->unresolved()));

  if (!pres.long_relations.empty()) {
    std::size_t in_ideal = 0, vanish = 0;
    for (const auto& r : pres.long_relations) {
      in_ideal += rs->reduce(r).empty();
      vanish += is_zero(evaluate(c, pres, r));
    }
    rep.add("long_list_in_ideal", in_ideal == pres.long_relations.size() && vanish == in_ideal,
            std::to_string(in_ideal) + "/" + std::to_string(pres.long_relations.size()) +
                " longer generators reduce to zero");
  }

  std::vector<Path> nf;
  try {
    nf = rs->normal_forms();
  } catch (const NonTerminationError& e) {
    rep.add("rank", false, e.what());
    return rep;
  }
  std::vector<std::string> nf_text;
  for (const auto& p : nf) nf_text.push_back(path_to_string(q, p));
  if (!pres.normal_forms.empty()) {
    std::set<std::string> want(pres.normal_forms.begin(), pres.normal_forms.end());
    std::set<std::string> got(nf_text.begin(), nf_text.end());
    rep.add("normal_forms", want == got, "irreducible paths match the expected list", nlohmann::json(nf_text));
  }

  std::vector<RationalVector> images;
  for (const auto& p : nf) images.push_back(evaluate(c, pres, single(p)));
  std::vector<RationalVector> units;
  for (std::size_t i = 0; i < c.rank(); ++i) units.push_back(c.basis_vector(i));
  bool spans = c.ring == Ring::Q ? rank_of(images, c.rank()) == c.rank()
                                 : same_local_span(images.empty() ? units : images, units, ring_prime(c.ring)) &&
                                       !images.empty();
  rep.add("span", spans, "images of the normal forms generate the corner");
  rep.add("rank", nf.size() == c.rank() && rs->confluent(),
          "quotient rank " + std::to_string(nf.size()) + ", corner rank " + std::to_string(c.rank()));
  return rep;
}

}  // namespace bisetforge
