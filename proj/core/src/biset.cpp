#include "bisetforge/biset.hpp"

#include <algorithm>
#include <bit>

#include "bisetforge/errors.hpp"

namespace bisetforge {

namespace {
std::string basis_label(const std::string& sub) {
  if (sub.rfind("U_", 0) == 0) return "H_" + sub.substr(2);
  if (sub.rfind("Delta(V_", 0) == 0) return "H^Delta_" + sub.substr(8, sub.size() - 9);
  return "H(" + sub + ")";
}

PermGroup product_of(const PermGroup& g) {
  std::vector<Permutation> gens;
  const auto one = Permutation::identity(g.degree());
  for (const auto& x : g.generators()) gens.push_back(x.direct_sum(one));
  for (const auto& x : g.generators()) gens.push_back(one.direct_sum(x));
  return PermGroup(2 * g.degree(), gens);
}
}  // namespace

BisetContext::BisetContext(const PermGroup& g) : group_(g), product_(product_of(g)), n_(g.order()) {
  if (n_ > 8) throw CapacityError("biset context supports |G| <= 8 (subgroups of G×G are 64-bit masks)");
  const auto& el = group_.elements();
  mul_.resize(n_ * n_);
  inv_.resize(n_);
  for (std::size_t x = 0; x < n_; ++x) {
    inv_[x] = group_.index_of(el[x].inverse());
    for (std::size_t y = 0; y < n_; ++y) mul_[x * n_ + y] = group_.index_of(el[x] * el[y]);
  }
  id_ = group_.index_of(group_.identity());

  auto reps = conjugacy_class_reps(product_);
  for (const auto& rc : reps) {
    BasisClass bc;
    bc.subgroup_label = rc.label;
    bc.label = basis_label(rc.label);
    bc.representative = mask_of(rc.representative);
    bc.subgroup_order = rc.representative.order();
    bc.biset_size = pairs() / bc.subgroup_order;
    classes_.push_back(bc);
  }
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    PermGroup rep = to_group(classes_[c].representative);
    for (const auto& x : product_.elements()) class_of_mask_[mask_of(rep.conjugate(x))] = c;
  }
  PairMask diag = 0;
  for (std::size_t h = 0; h < n_; ++h) diag |= PairMask{1} << pair(h, h);
  identity_class_ = class_of(diag);
}

std::shared_ptr<const BisetContext> BisetContext::s3() {
  static const std::shared_ptr<const BisetContext> ctx = std::make_shared<const BisetContext>(s3::group());
  return ctx;
}

std::size_t BisetContext::class_of(PairMask mask) const {
  auto it = class_of_mask_.find(mask);
  if (it == class_of_mask_.end()) throw InternalError("stabilizer matches no subgroup class");
  return it->second;
}

std::size_t BisetContext::index_of_label(const std::string& label) const {
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    if (classes_[c].label == label || classes_[c].subgroup_label == label) return c;
  }
  throw DomainError("unknown basis label '" + label + "'");
}

PairMask BisetContext::mask_of(const PermGroup& sub) const {
  const std::size_t d = group_.degree();
  PairMask mask = 0;
  for (const auto& e : sub.elements()) {
    if (e.degree() != 2 * d) throw DomainError("subgroup does not live in the product group");
    std::vector<std::uint16_t> h(e.images().begin(), e.images().begin() + static_cast<long>(d));
    std::vector<std::uint16_t> k;
    for (std::size_t i = d; i < 2 * d; ++i) {
      if (e(i) < d) throw DomainError("element mixes the two factors");
      k.push_back(static_cast<std::uint16_t>(e(i) - d));
    }
    mask |= PairMask{1} << pair(group_.index_of(Permutation(h)), group_.index_of(Permutation(k)));
  }
  return mask;
}

PermGroup BisetContext::to_group(PairMask mask) const {
  std::vector<Permutation> elts;
  const auto& el = group_.elements();
  for (std::size_t p = 0; p < pairs(); ++p)
    if (mask >> p & 1) elts.push_back(el[first(p)].direct_sum(el[second(p)]));
  return PermGroup::from_elements(2 * group_.degree(), elts);
}

std::uint32_t BisetContext::p1(PairMask mask) const {
  std::uint32_t out = 0;
  for (std::size_t p = 0; p < pairs(); ++p)
    if (mask >> p & 1) out |= 1u << first(p);
  return out;
}

std::uint32_t BisetContext::p2(PairMask mask) const {
  std::uint32_t out = 0;
  for (std::size_t p = 0; p < pairs(); ++p)
    if (mask >> p & 1) out |= 1u << second(p);
  return out;
}

PairMask BisetContext::star(PairMask u, PairMask w) const {
  PairMask out = 0;
  for (std::size_t p = 0; p < pairs(); ++p) {
    if (!(u >> p & 1)) continue;
    for (std::size_t q = 0; q < pairs(); ++q) {
      if ((w >> q & 1) && second(p) == first(q)) out |= PairMask{1} << pair(first(p), second(q));
    }
  }
  return out;
}

PairMask BisetContext::conjugate_first(PairMask v, std::size_t t) const {
  PairMask out = 0;
  for (std::size_t p = 0; p < pairs(); ++p)
    if (v >> p & 1) out |= PairMask{1} << pair(mul(mul(t, first(p)), inv(t)), second(p));
  return out;
}

Biset::Biset(std::shared_ptr<const BisetContext> ctx, std::size_t points, std::vector<std::uint32_t> action)
    : ctx_(std::move(ctx)), points_(points), action_(std::move(action)) {
  if (action_.size() != ctx_->pairs() * points_) throw DomainError("action table has the wrong size");
  for (auto x : action_)
    if (x >= points_) throw DomainError("action table maps outside the point set");
}

bool Biset::is_valid_action() const {
  const auto& c = *ctx_;
  const std::size_t e = c.pair(c.identity(), c.identity());
  for (std::size_t x = 0; x < points_; ++x) {
    if (act(e, x) != x) return false;
    for (std::size_t p = 0; p < c.pairs(); ++p)
      for (std::size_t q = 0; q < c.pairs(); ++q)
        if (act(c.pair_mul(p, q), x) != act(p, act(q, x))) return false;
    for (std::size_t h = 0; h < c.n(); ++h)
      for (std::size_t g = 0; g < c.n(); ++g)
        if (right(left(h, x), g) != left(h, right(x, g))) return false;
  }
  return true;
}

PairMask Biset::stabilizer(std::size_t x) const {
  PairMask m = 0;
  for (std::size_t p = 0; p < ctx_->pairs(); ++p)
    if (act(p, x) == x) m |= PairMask{1} << p;
  return m;
}

std::vector<std::size_t> Biset::orbits(std::size_t& count) const {
  std::vector<std::size_t> id(points_, SIZE_MAX);
  count = 0;
  std::vector<std::size_t> stack;
  for (std::size_t x = 0; x < points_; ++x) {
    if (id[x] != SIZE_MAX) continue;
    id[x] = count;
    stack.push_back(x);
    while (!stack.empty()) {
      std::size_t y = stack.back();
      stack.pop_back();
      for (std::size_t p = 0; p < ctx_->pairs(); ++p) {
        std::size_t z = act(p, y);
        if (id[z] == SIZE_MAX) {
          id[z] = count;
          stack.push_back(z);
        }
      }
    }
    ++count;
  }
  return id;
}

Biset transitive_biset(std::shared_ptr<const BisetContext> ctx, PairMask u) {
  const auto& c = *ctx;
  // Point of coset xU is its least member.
  std::vector<std::uint32_t> point_of(c.pairs(), UINT32_MAX);
  std::vector<std::size_t> rep;
  for (std::size_t x = 0; x < c.pairs(); ++x) {
    if (point_of[x] != UINT32_MAX) continue;
    const auto pt = static_cast<std::uint32_t>(rep.size());
    rep.push_back(x);
    for (std::size_t q = 0; q < c.pairs(); ++q)
      if (u >> q & 1) point_of[c.pair_mul(x, q)] = pt;
  }
  if (rep.size() * static_cast<std::size_t>(std::popcount(u)) != c.pairs()) {
    throw DomainError("mask is not a subgroup of G×G");
  }
  std::vector<std::uint32_t> action(c.pairs() * rep.size());
  for (std::size_t p = 0; p < c.pairs(); ++p)
    for (std::size_t i = 0; i < rep.size(); ++i) action[p * rep.size() + i] = point_of[c.pair_mul(p, rep[i])];
  return Biset(std::move(ctx), rep.size(), std::move(action));
}

Biset basis_biset(std::shared_ptr<const BisetContext> ctx, std::size_t class_index) {
  PairMask u = ctx->classes().at(class_index).representative;
  return transitive_biset(std::move(ctx), u);
}

Biset tensor(const Biset& m, const Biset& n) {
  if (&m.context() != &n.context()) throw DomainError("tensor: bisets over different contexts");
  const auto& c = m.context();
  const std::size_t nm = m.size(), nn = n.size();
  // Middle action g·(x,y) = (x·g⁻¹, g·y) = ((1,g)·x, (g,1)·y).
  std::vector<std::uint32_t> orbit(nm * nn, UINT32_MAX);
  std::vector<std::size_t> rep;
  for (std::size_t x = 0; x < nm; ++x)
    for (std::size_t y = 0; y < nn; ++y) {
      if (orbit[x * nn + y] != UINT32_MAX) continue;
      const auto id = static_cast<std::uint32_t>(rep.size());
      rep.push_back(x * nn + y);
      for (std::size_t g = 0; g < c.n(); ++g) {
        std::size_t gx = m.act(c.pair(c.identity(), g), x);
        std::size_t gy = n.act(c.pair(g, c.identity()), y);
        orbit[gx * nn + gy] = id;
      }
    }
  // Induced (h,k)·[x,y] = [(h,1)·x, (1,k)·y].
  std::vector<std::uint32_t> action(c.pairs() * rep.size());
  for (std::size_t p = 0; p < c.pairs(); ++p) {
    const std::size_t hp = c.pair(c.first(p), c.identity());
    const std::size_t kp = c.pair(c.identity(), c.second(p));
    for (std::size_t i = 0; i < rep.size(); ++i) {
      std::size_t x = rep[i] / nn, y = rep[i] % nn;
      action[p * rep.size() + i] = orbit[m.act(hp, x) * nn + n.act(kp, y)];
    }
  }
  return Biset(m.context_ptr(), rep.size(), std::move(action));
}

std::vector<std::int64_t> decompose(const Biset& x) {
  std::size_t count = 0;
  auto id = x.orbits(count);
  std::vector<std::int64_t> out(x.context().rank(), 0);
  std::vector<bool> seen(count, false);
  for (std::size_t pt = 0; pt < x.size(); ++pt) {
    if (seen[id[pt]]) continue;
    seen[id[pt]] = true;
    ++out[x.context().class_of(x.stabilizer(pt))];
  }
  return out;
}

}  // namespace bisetforge
