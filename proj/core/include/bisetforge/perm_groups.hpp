#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bisetforge {

/// A bijection of {0,...,n-1}. Products apply the left factor first, so
/// (p*q)(i) = q(p(i)) and (1,2)*(1,3) = (1,2,3) in cycle notation.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::uint16_t> images);
  static Permutation identity(std::size_t degree);
  /// Cycle notation with 1-based points, e.g. "(1,2)(3,4,5)" or "()".
  static Permutation parse_cycles(std::string_view text, std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  std::uint16_t operator()(std::size_t point) const { return images_[point]; }
  const std::vector<std::uint16_t>& images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;
  std::size_t order() const;
  /// Builds a permutation on degree()+other.degree() points acting as *this
  /// on the first block and as other on the second.
  Permutation direct_sum(const Permutation& other) const;
  std::string to_cycle_string() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation& a, const Permutation& b) { return a.images_ == b.images_; }
  friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }
  friend bool operator<(const Permutation& a, const Permutation& b) { return a.images_ < b.images_; }

 private:
  std::vector<std::uint16_t> images_;
};

/// Finite permutation group with its materialized, sorted element list.
class PermGroup {
 public:
  PermGroup() = default;
  /// Closure of the generators. Throws CapacityError past kMaxOrder.
  PermGroup(std::size_t degree, std::vector<Permutation> generators);
  /// Trusts nothing: closes the given elements under products.
  static PermGroup from_elements(std::size_t degree, const std::vector<Permutation>& elements);
  static PermGroup symmetric(std::size_t n);
  static PermGroup cyclic(std::size_t n);
  static PermGroup trivial(std::size_t degree);

  static constexpr std::size_t kMaxOrder = 10000;

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  const Permutation& identity() const { return elements_.front(); }

  bool contains(const Permutation& p) const;
  /// Position of p in elements(); throws DomainError if absent.
  std::size_t index_of(const Permutation& p) const;
  bool is_subgroup_of(const PermGroup& g) const;
  /// g·U·g⁻¹.
  PermGroup conjugate(const Permutation& g) const;
  /// Canonical identity: equal element lists.
  friend bool operator==(const PermGroup& a, const PermGroup& b) {
    return a.degree_ == b.degree_ && a.elements_ == b.elements_;
  }
  /// Canonical order: by order, then lexicographic element list.
  friend bool operator<(const PermGroup& a, const PermGroup& b);
  std::string describe() const;

 private:
  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
};

struct SubgroupClass {
  PermGroup representative;
  std::size_t class_size = 0;
  std::string label;
};

/// Every subgroup once, in canonical order.
std::vector<PermGroup> enumerate_subgroups(const PermGroup& g);
/// One representative per conjugacy class. For the standard S3 on 3 points
/// and S3×S3 on 6 points the representatives, labels and order follow the
/// fixed naming (V_t and U_{i,j}, U_6, U_7, U_8, Delta(V_t)); otherwise classes
/// are ordered by canonical representative and labelled K_1, K_2, ...
std::vector<SubgroupClass> conjugacy_class_reps(const PermGroup& g);

struct ConjugacyResult {
  bool conjugate = false;
  std::optional<Permutation> witness;  // g with g·U·g⁻¹ = V
};
ConjugacyResult are_conjugate(const PermGroup& g, const PermGroup& u, const PermGroup& v);

/// Representatives of H\G/K, each the least element of its double coset.
std::vector<Permutation> double_cosets(const PermGroup& g, const PermGroup& h, const PermGroup& k);

namespace s3 {
/// a = (1,2), b = (1,2,3) in S3 on three points.
Permutation a();
Permutation b();
PermGroup group();
/// (h,k) ↦ h on {1,2,3} and k on {4,5,6}.
Permutation pair(const Permutation& h, const Permutation& k);
PermGroup product_group();
/// The named subgroups V_0..V_5 of S3.
PermGroup V(int t);
struct NamedSubgroup {
  std::string label;
  std::string generator_text;  // "(a,a),(1,b)"
  PermGroup group;
};
/// The 22 class representatives of S3×S3 in the fixed order.
const std::vector<NamedSubgroup>& product_classes();
}  // namespace s3

/// Parses "S3", "S3xS3", "Sn", "Cn", or a list of generators in cycle notation
/// separated by ';' or by ',' / whitespace at top level.
PermGroup parse_group_spec(std::string_view spec);

}  // namespace bisetforge
