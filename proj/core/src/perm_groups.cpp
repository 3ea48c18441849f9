#include "bisetforge/perm_groups.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "bisetforge/errors.hpp"

namespace bisetforge {

Permutation::Permutation(std::vector<std::uint16_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto x : images_) {
    if (x >= images_.size() || seen[x]) throw DomainError("images do not form a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<std::uint16_t> im(degree);
  std::iota(im.begin(), im.end(), 0);
  return Permutation(std::move(im));
}

Permutation Permutation::parse_cycles(std::string_view text, std::size_t degree) {
  if (degree > 65535) throw CapacityError("degree too large");
  std::vector<std::uint16_t> im(degree);
  std::iota(im.begin(), im.end(), 0);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  std::vector<bool> used(degree, false);
  skip_ws();
  if (i == text.size()) throw ParseError("empty permutation");
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '(' in '" + std::string(text) + "'");
    ++i;
    std::vector<std::size_t> cycle;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i) throw ParseError("expected a point in '" + std::string(text) + "'");
      std::size_t pt = std::stoul(std::string(text.substr(start, i - start)));
      if (pt == 0 || pt > degree) {
        throw ParseError("point " + std::to_string(pt) + " outside 1.." + std::to_string(degree));
      }
      cycle.push_back(pt - 1);
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        skip_ws();
      }
    }
    if (i == text.size()) throw ParseError("unterminated cycle in '" + std::string(text) + "'");
    ++i;
    skip_ws();
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (used[cycle[k]]) throw ParseError("point repeated in '" + std::string(text) + "'");
      used[cycle[k]] = true;
      im[cycle[k]] = static_cast<std::uint16_t>(cycle[(k + 1) % cycle.size()]);
    }
  }
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<std::uint16_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<std::uint16_t>(i);
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::size_t Permutation::order() const {
  std::size_t ord = 1;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

Permutation Permutation::direct_sum(const Permutation& other) const {
  std::vector<std::uint16_t> im = images_;
  const auto shift = static_cast<std::uint16_t>(images_.size());
  for (auto x : other.images_) im.push_back(static_cast<std::uint16_t>(x + shift));
  return Permutation(std::move(im));
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream os;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    os << '(';
    bool first = true;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      os << (first ? "" : ",") << j + 1;
      first = false;
    }
    os << ')';
  }
  std::string s = os.str();
  return s.empty() ? "()" : s;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw DomainError("product of permutations of different degrees");
  Permutation p;
  p.images_.resize(a.degree());
  for (std::size_t i = 0; i < a.degree(); ++i) p.images_[i] = b.images_[a.images_[i]];
  return p;
}

namespace {
std::vector<Permutation> close(std::size_t degree, const std::vector<Permutation>& gens) {
  std::set<Permutation> seen{Permutation::identity(degree)};
  std::vector<Permutation> frontier{Permutation::identity(degree)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& x : frontier) {
      for (const auto& s : gens) {
        Permutation y = x * s;
        if (seen.insert(y).second) {
          if (seen.size() > PermGroup::kMaxOrder) {
            throw CapacityError("group order exceeds " + std::to_string(PermGroup::kMaxOrder));
          }
          next.push_back(std::move(y));
        }
      }
    }
    frontier.swap(next);
  }
  return {seen.begin(), seen.end()};
}
}  // namespace

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)) {
  for (const auto& g : generators_) {
    if (g.degree() != degree_) throw DomainError("generator degree does not match group degree");
  }
  elements_ = close(degree_, generators_);
}

PermGroup PermGroup::from_elements(std::size_t degree, const std::vector<Permutation>& elements) {
  return PermGroup(degree, elements);
}

PermGroup PermGroup::symmetric(std::size_t n) {
  if (n <= 1) return trivial(n);
  std::vector<std::uint16_t> cyc(n);
  for (std::size_t i = 0; i < n; ++i) cyc[i] = static_cast<std::uint16_t>((i + 1) % n);
  std::vector<std::uint16_t> tr(n);
  std::iota(tr.begin(), tr.end(), 0);
  std::swap(tr[0], tr[1]);
  return PermGroup(n, {Permutation(tr), Permutation(cyc)});
}

PermGroup PermGroup::cyclic(std::size_t n) {
  if (n <= 1) return trivial(1);
  std::vector<std::uint16_t> cyc(n);
  for (std::size_t i = 0; i < n; ++i) cyc[i] = static_cast<std::uint16_t>((i + 1) % n);
  return PermGroup(n, {Permutation(cyc)});
}

PermGroup PermGroup::trivial(std::size_t degree) { return PermGroup(degree, {}); }

bool PermGroup::contains(const Permutation& p) const {
  return p.degree() == degree_ && std::binary_search(elements_.begin(), elements_.end(), p);
}

std::size_t PermGroup::index_of(const Permutation& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) throw DomainError(p.to_cycle_string() + " is not a group element");
  return static_cast<std::size_t>(it - elements_.begin());
}

bool PermGroup::is_subgroup_of(const PermGroup& g) const {
  if (degree_ != g.degree_) return false;
  for (const auto& x : elements_)
    if (!g.contains(x)) return false;
  return true;
}

PermGroup PermGroup::conjugate(const Permutation& g) const {
  const Permutation gi = g.inverse();
  std::vector<Permutation> gens;
  for (const auto& s : generators_) gens.push_back(g * s * gi);
  PermGroup out;
  out.degree_ = degree_;
  out.generators_ = std::move(gens);
  out.elements_.reserve(elements_.size());
  for (const auto& x : elements_) out.elements_.push_back(g * x * gi);
  std::sort(out.elements_.begin(), out.elements_.end());
  return out;
}

bool operator<(const PermGroup& a, const PermGroup& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return a.elements_ < b.elements_;
}

std::string PermGroup::describe() const {
  std::ostringstream os;
  os << "<";
  for (std::size_t i = 0; i < generators_.size(); ++i) os << (i ? ", " : "") << generators_[i].to_cycle_string();
  os << "> of order " << order();
  return os.str();
}

std::vector<PermGroup> enumerate_subgroups(const PermGroup& g) {
  if (g.order() > PermGroup::kMaxOrder) throw CapacityError("group too large for subgroup enumeration");
  // Every subgroup is a join of cyclic subgroups; grow joins layer by layer.
  std::vector<Permutation> cyclic_gens;
  {
    std::set<std::vector<Permutation>> seen;
    for (const auto& x : g.elements()) {
      PermGroup c(g.degree(), {x});
      if (seen.insert(c.elements()).second) cyclic_gens.push_back(x);
    }
  }
  std::map<std::vector<Permutation>, PermGroup> found;
  PermGroup triv = PermGroup::trivial(g.degree());
  found.emplace(triv.elements(), triv);
  std::vector<PermGroup> layer{triv};
  while (!layer.empty()) {
    std::vector<PermGroup> next;
    for (const auto& h : layer) {
      for (const auto& c : cyclic_gens) {
        if (h.contains(c)) continue;
        auto gens = h.generators();
        gens.push_back(c);
        PermGroup j(g.degree(), std::move(gens));
        if (found.find(j.elements()) == found.end()) {
          found.emplace(j.elements(), j);
          next.push_back(std::move(j));
        }
      }
    }
    layer.swap(next);
  }
  std::vector<PermGroup> out;
  out.reserve(found.size());
  for (auto& [_, h] : found) out.push_back(h);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {
// Groups each subgroup with its conjugacy class; returns class id per subgroup
// and the number of classes, in order of first appearance.
std::vector<std::size_t> classify(const PermGroup& g, const std::vector<PermGroup>& subs, std::size_t& n_classes) {
  std::map<std::vector<Permutation>, std::size_t> where;
  for (std::size_t i = 0; i < subs.size(); ++i) where.emplace(subs[i].elements(), i);
  std::vector<std::size_t> cls(subs.size(), SIZE_MAX);
  n_classes = 0;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (cls[i] != SIZE_MAX) continue;
    for (const auto& x : g.elements()) {
      auto it = where.find(subs[i].conjugate(x).elements());
      if (it == where.end()) throw InternalError("conjugate of a subgroup was not enumerated");
      cls[it->second] = n_classes;
    }
    ++n_classes;
  }
  return cls;
}

bool is_standard(const PermGroup& g, const PermGroup& standard) {
  return g.degree() == standard.degree() && g.elements() == standard.elements();
}
}  // namespace

std::vector<SubgroupClass> conjugacy_class_reps(const PermGroup& g) {
  auto subs = enumerate_subgroups(g);
  std::size_t n_classes = 0;
  auto cls = classify(g, subs, n_classes);
  std::vector<std::size_t> sizes(n_classes, 0);
  for (auto c : cls) ++sizes[c];

  std::vector<std::pair<std::string, PermGroup>> named;
  if (is_standard(g, s3::product_group())) {
    for (const auto& ns : s3::product_classes()) named.emplace_back(ns.label, ns.group);
  } else if (is_standard(g, s3::group())) {
    for (int t : {0, 1, 4, 5}) named.emplace_back("V_" + std::to_string(t), s3::V(t));
  }

  std::vector<SubgroupClass> out;
  if (!named.empty()) {
    std::vector<bool> covered(n_classes, false);
    for (const auto& [label, rep] : named) {
      auto it = std::lower_bound(subs.begin(), subs.end(), rep);
      if (it == subs.end() || !(*it == rep)) throw InternalError("named representative " + label + " not enumerated");
      std::size_t c = cls[static_cast<std::size_t>(it - subs.begin())];
      if (covered[c]) throw InternalError("named representatives " + label + " repeats a class");
      covered[c] = true;
      out.push_back({rep, sizes[c], label});
    }
    if (out.size() != n_classes) throw InternalError("named representatives miss a class");
    return out;
  }
  std::vector<bool> emitted(n_classes, false);
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (emitted[cls[i]]) continue;
    emitted[cls[i]] = true;
    out.push_back({subs[i], sizes[cls[i]], "K_" + std::to_string(out.size() + 1)});
  }
  return out;
}

ConjugacyResult are_conjugate(const PermGroup& g, const PermGroup& u, const PermGroup& v) {
  if (!u.is_subgroup_of(g) || !v.is_subgroup_of(g)) throw DomainError("are_conjugate: argument is not a subgroup");
  if (u.order() != v.order()) return {};
  for (const auto& x : g.elements()) {
    if (u.conjugate(x) == v) return {true, x};
  }
  return {};
}

std::vector<Permutation> double_cosets(const PermGroup& g, const PermGroup& h, const PermGroup& k) {
  if (!h.is_subgroup_of(g) || !k.is_subgroup_of(g)) throw DomainError("double_cosets: argument is not a subgroup");
  std::vector<bool> covered(g.order(), false);
  std::vector<Permutation> reps;
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (covered[i]) continue;
    const Permutation& x = g.elements()[i];
    reps.push_back(x);
    for (const auto& a : h.elements())
      for (const auto& b : k.elements()) covered[g.index_of(a * x * b)] = true;
  }
  return reps;
}

namespace s3 {
Permutation a() { return Permutation::parse_cycles("(1,2)", 3); }
Permutation b() { return Permutation::parse_cycles("(1,2,3)", 3); }
PermGroup group() { return PermGroup(3, {a(), b()}); }
Permutation pair(const Permutation& h, const Permutation& k) { return h.direct_sum(k); }
PermGroup product_group() {
  const auto one = Permutation::identity(3);
  return PermGroup(6, {pair(a(), one), pair(b(), one), pair(one, a()), pair(one, b())});
}

PermGroup V(int t) {
  switch (t) {
    case 0: return PermGroup::trivial(3);
    case 1: return PermGroup(3, {a()});
    case 2: return PermGroup(3, {Permutation::parse_cycles("(1,3)", 3)});
    case 3: return PermGroup(3, {Permutation::parse_cycles("(2,3)", 3)});
    case 4: return PermGroup(3, {b()});
    case 5: return group();
    default: throw DomainError("V_t is defined for t in 0..5");
  }
}

namespace {
Permutation letter(char c) {
  switch (c) {
    case '1': return Permutation::identity(3);
    case 'a': return a();
    case 'b': return b();
    default: throw InternalError("bad generator letter");
  }
}

NamedSubgroup make(const std::string& label, const std::string& gens) {
  // gens is a list like "(a,1),(1,b)"; "" is the trivial subgroup.
  std::vector<Permutation> perms;
  for (std::size_t i = 0; i + 4 < gens.size() + 1; i += 6) perms.push_back(pair(letter(gens[i + 1]), letter(gens[i + 3])));
  return {label, gens.empty() ? "(1,1)" : gens, PermGroup(6, perms)};
}
}  // namespace

const std::vector<NamedSubgroup>& product_classes() {
  static const std::vector<NamedSubgroup> classes = {
      make("U_{0,0}", ""),
      make("U_{1,0}", "(a,1)"),
      make("U_{0,1}", "(1,a)"),
      make("Delta(V_1)", "(a,a)"),
      make("U_{4,0}", "(b,1)"),
      make("U_{0,4}", "(1,b)"),
      make("Delta(V_4)", "(b,b)"),
      make("U_{1,1}", "(a,1),(1,a)"),
      make("U_{5,0}", "(a,1),(b,1)"),
      make("U_{0,5}", "(1,a),(1,b)"),
      make("U_6", "(a,a),(1,b)"),
      make("U_{4,1}", "(b,1),(1,a)"),
      make("U_{1,4}", "(a,1),(1,b)"),
      make("U_7", "(a,a),(b,1)"),
      make("Delta(V_5)", "(a,a),(b,b)"),
      make("U_{4,4}", "(b,1),(1,b)"),
      make("U_{1,5}", "(a,1),(1,a),(1,b)"),
      make("U_{5,1}", "(a,1),(b,1),(1,a)"),
      make("U_{4,5}", "(b,1),(1,a),(1,b)"),
      make("U_{5,4}", "(a,1),(b,1),(1,b)"),
      make("U_8", "(a,a),(b,1),(1,b)"),
      make("U_{5,5}", "(a,1),(b,1),(1,a),(1,b)"),
  };
  return classes;
}
}  // namespace s3

namespace {
std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::optional<PermGroup> named_group(const std::string& s) {
  if (s.size() >= 2 && (s[0] == 'S' || s[0] == 'C')) {
    for (std::size_t i = 1; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
    std::size_t n = std::stoul(s.substr(1));
    if (n == 0) throw ParseError("group index must be positive");
    if (n > 7) throw CapacityError("named groups are limited to degree 7");
    return s[0] == 'S' ? PermGroup::symmetric(n) : PermGroup::cyclic(n);
  }
  return std::nullopt;
}

PermGroup direct_product(const PermGroup& x, const PermGroup& y) {
  std::vector<Permutation> gens;
  const auto ix = Permutation::identity(x.degree());
  const auto iy = Permutation::identity(y.degree());
  for (const auto& g : x.generators()) gens.push_back(g.direct_sum(iy));
  for (const auto& g : y.generators()) gens.push_back(ix.direct_sum(g));
  return PermGroup(x.degree() + y.degree(), gens);
}
}  // namespace

PermGroup parse_group_spec(std::string_view spec_in) {
  const std::string spec = trim(spec_in);
  if (spec.empty()) throw ParseError("empty group specification");
  if (spec.find('(') == std::string::npos) {
    // Named groups, possibly a product "S3xS3".
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= spec.size(); ++i) {
      if (i == spec.size() || spec[i] == 'x' || spec[i] == 'X') {
        parts.push_back(trim(std::string_view(spec).substr(start, i - start)));
        start = i + 1;
      }
    }
    std::optional<PermGroup> acc;
    for (const auto& p : parts) {
      auto g = named_group(p);
      if (!g) throw ParseError("unknown group '" + p + "' (expected Sn, Cn, products like S3xS3, or cycle lists)");
      acc = acc ? direct_product(*acc, *g) : *g;
    }
    return *acc;
  }
  // Generator list: split at depth-0 separators.
  std::vector<std::string> gens;
  std::string cur;
  int depth = 0;
  for (char c : spec) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth < 0) throw ParseError("unbalanced parentheses in '" + spec + "'");
    if (depth == 0 && (c == ',' || c == ';' || std::isspace(static_cast<unsigned char>(c)))) {
      if (!trim(cur).empty()) gens.push_back(trim(cur));
      cur.clear();
      continue;
    }
    cur.push_back(c);
  }
  if (depth != 0) throw ParseError("unbalanced parentheses in '" + spec + "'");
  if (!trim(cur).empty()) gens.push_back(trim(cur));
  std::size_t degree = 1;
  for (const auto& g : gens) {
    std::size_t i = 0;
    while (i < g.size()) {
      if (std::isdigit(static_cast<unsigned char>(g[i]))) {
        std::size_t j = i;
        while (j < g.size() && std::isdigit(static_cast<unsigned char>(g[j]))) ++j;
        degree = std::max<std::size_t>(degree, std::stoul(g.substr(i, j - i)));
        i = j;
      } else {
        ++i;
      }
    }
  }
  std::vector<Permutation> perms;
  for (const auto& g : gens) perms.push_back(Permutation::parse_cycles(g, degree));
  return PermGroup(degree, perms);
}

}  // namespace bisetforge
