#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "bisetforge/perm_groups.hpp"

namespace bisetforge {

/// Subgroups of G×G as bit masks over pair indices p = h·|G| + k, where h, k
/// index G.elements(). Hence |G| <= 8.
using PairMask = std::uint64_t;

struct BasisClass {
  std::string subgroup_label;  // "U_{1,0}", "Delta(V_5)", ...
  std::string label;           // "H_{1,0}", "H^Delta_5", ...
  PairMask representative = 0;
  std::size_t subgroup_order = 0;
  std::size_t biset_size = 0;  // |G×G| / |U|
};

/// Group data shared by all bisets over one G: multiplication tables, the
/// conjugacy classes of subgroups of G×G (the basis of B(G,G)), and a lookup
/// from any subgroup mask to its class.
class BisetContext {
 public:
  explicit BisetContext(const PermGroup& g);
  static std::shared_ptr<const BisetContext> s3();

  const PermGroup& group() const { return group_; }
  std::size_t n() const { return n_; }
  std::size_t pairs() const { return n_ * n_; }
  std::size_t mul(std::size_t x, std::size_t y) const { return mul_[x * n_ + y]; }
  std::size_t inv(std::size_t x) const { return inv_[x]; }
  std::size_t identity() const { return id_; }

  std::size_t pair(std::size_t h, std::size_t k) const { return h * n_ + k; }
  std::size_t first(std::size_t p) const { return p / n_; }
  std::size_t second(std::size_t p) const { return p % n_; }
  std::size_t pair_mul(std::size_t p, std::size_t q) const {
    return pair(mul(first(p), first(q)), mul(second(p), second(q)));
  }
  std::size_t pair_inv(std::size_t p) const { return pair(inv(first(p)), inv(second(p))); }

  const std::vector<BasisClass>& classes() const { return classes_; }
  std::size_t rank() const { return classes_.size(); }
  /// Class of a subgroup mask; throws InternalError when mask is not a subgroup.
  std::size_t class_of(PairMask mask) const;
  /// Index of the class containing the diagonal subgroup, i.e. of [G].
  std::size_t identity_class() const { return identity_class_; }
  /// Index of a basis label ("H_{0,0}") or subgroup label ("U_{0,0}").
  std::size_t index_of_label(const std::string& label) const;

  PairMask mask_of(const PermGroup& sub) const;  // sub <= G×G realised on 2·degree points
  PermGroup to_group(PairMask mask) const;

  /// Projections to G as bit masks over element indices.
  std::uint32_t p1(PairMask mask) const;
  std::uint32_t p2(PairMask mask) const;
  /// U ∗ W = {(a,c) : (a,b) ∈ U and (b,c) ∈ W for some b}.
  PairMask star(PairMask u, PairMask w) const;
  /// {(t·b·t⁻¹, c) : (b,c) ∈ V}.
  PairMask conjugate_first(PairMask v, std::size_t t) const;

 private:
  PermGroup group_;
  PermGroup product_;
  std::size_t n_ = 0;
  std::size_t id_ = 0;
  std::vector<std::size_t> mul_;
  std::vector<std::size_t> inv_;
  std::vector<BasisClass> classes_;
  std::unordered_map<PairMask, std::size_t> class_of_mask_;
  std::size_t identity_class_ = 0;
};

/// A finite left (G×G)-set; (h,k)·x encodes h·x·k⁻¹. The right G-action is
/// x·g = (1,g⁻¹)·x.
class Biset {
 public:
  Biset(std::shared_ptr<const BisetContext> ctx, std::size_t points, std::vector<std::uint32_t> action);

  const BisetContext& context() const { return *ctx_; }
  std::shared_ptr<const BisetContext> context_ptr() const { return ctx_; }
  std::size_t size() const { return points_; }
  /// (h,k)·x for the pair index p.
  std::uint32_t act(std::size_t p, std::size_t x) const { return action_[p * points_ + x]; }
  std::uint32_t left(std::size_t h, std::size_t x) const { return act(ctx_->pair(h, ctx_->identity()), x); }
  std::uint32_t right(std::size_t x, std::size_t g) const {
    return act(ctx_->pair(ctx_->identity(), ctx_->inv(g)), x);
  }

  /// Checks identity, compatibility with the product, and that left and right
  /// actions commute.
  bool is_valid_action() const;
  PairMask stabilizer(std::size_t x) const;
  /// Orbit id per point; orbits numbered by least point.
  std::vector<std::size_t> orbits(std::size_t& count) const;

 private:
  std::shared_ptr<const BisetContext> ctx_;
  std::size_t points_;
  std::vector<std::uint32_t> action_;
};

/// (G×G)/U with left translation.
Biset transitive_biset(std::shared_ptr<const BisetContext> ctx, PairMask u);
Biset basis_biset(std::shared_ptr<const BisetContext> ctx, std::size_t class_index);
/// M ×_G N.
Biset tensor(const Biset& m, const Biset& n);
/// Multiplicity of each basis class among the (G×G)-orbits.
std::vector<std::int64_t> decompose(const Biset& x);

}  // namespace bisetforge
