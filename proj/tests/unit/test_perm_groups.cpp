#include <doctest.h>

#include <set>

#include "bisetforge/errors.hpp"
#include "bisetforge/perm_groups.hpp"

using namespace bisetforge;

namespace {

// |G : N_G(U)| by brute force.
std::size_t class_size_brute(const PermGroup& g, const PermGroup& u) {
  std::set<std::vector<Permutation>> seen;
  for (const auto& x : g.elements()) seen.insert(u.conjugate(x).elements());
  return seen.size();
}

}  // namespace

TEST_CASE("product applies the left factor first") {
  Permutation p = Permutation::parse_cycles("(1,2)", 3);
  Permutation q = Permutation::parse_cycles("(1,3)", 3);
  CHECK((p * q).to_cycle_string() == "(1,2,3)");
  CHECK((p * p).is_identity());
  CHECK(Permutation::parse_cycles("(1,2,3)", 3).order() == 3);
  CHECK(Permutation::parse_cycles("()", 4).is_identity());
  CHECK_THROWS_AS(Permutation::parse_cycles("(1,1)", 3), ParseError);
  CHECK_THROWS(Permutation::parse_cycles("(1,4)", 3));
}

TEST_CASE("subgroups of small groups") {
  CHECK(enumerate_subgroups(s3::group()).size() == 6);
  CHECK(enumerate_subgroups(PermGroup::trivial(3)).size() == 1);
  CHECK(enumerate_subgroups(PermGroup::cyclic(6)).size() == 4);
  // S4: 30 subgroups in 11 classes
  PermGroup s4 = PermGroup::symmetric(4);
  CHECK(enumerate_subgroups(s4).size() == 30);
  CHECK(conjugacy_class_reps(s4).size() == 11);
  CHECK(enumerate_subgroups(s3::product_group()).size() == 60);
}

TEST_CASE("S3 classes and representatives") {
  auto classes = conjugacy_class_reps(s3::group());
  REQUIRE(classes.size() == 4);
  CHECK(classes[0].representative == s3::V(0));
  CHECK(classes[1].representative == s3::V(1));
  CHECK(classes[2].representative == s3::V(4));
  CHECK(classes[3].representative == s3::V(5));
  CHECK(classes[1].class_size == 3);
  CHECK(conjugacy_class_reps(PermGroup::trivial(1)).size() == 1);
}

TEST_CASE("S3xS3 classes match the named table") {
  const PermGroup g = s3::product_group();
  auto classes = conjugacy_class_reps(g);
  const auto& named = s3::product_classes();
  REQUIRE(classes.size() == 22);
  REQUIRE(named.size() == 22);
  std::size_t total = 0;
  for (std::size_t i = 0; i < 22; ++i) {
    CAPTURE(named[i].label);
    CHECK(classes[i].label == named[i].label);
    CHECK(classes[i].representative == named[i].group);
    CHECK(named[i].group.is_subgroup_of(g));
    CHECK(classes[i].class_size == class_size_brute(g, classes[i].representative));
    total += classes[i].class_size;
  }
  CHECK(total == 60);
  // representatives pairwise non-conjugate
  for (std::size_t i = 0; i < 22; ++i)
    for (std::size_t j = i + 1; j < 22; ++j)
      if (classes[i].representative.order() == classes[j].representative.order())
        CHECK_FALSE(are_conjugate(g, classes[i].representative, classes[j].representative).conjugate);
}

TEST_CASE("conjugacy witnesses") {
  const PermGroup g = s3::group();
  PermGroup v2(3, {Permutation::parse_cycles("(1,3)", 3)});
  auto r = are_conjugate(g, s3::V(1), v2);
  REQUIRE(r.conjugate);
  REQUIRE(r.witness.has_value());
  CHECK(s3::V(1).conjugate(*r.witness) == v2);
  CHECK_FALSE(are_conjugate(g, s3::V(1), s3::V(4)).conjugate);
  auto self = are_conjugate(g, s3::V(4), s3::V(4));
  CHECK(self.conjugate);
  CHECK(self.witness->is_identity());
}

TEST_CASE("double cosets") {
  const PermGroup g = s3::group();
  const PermGroup one = PermGroup::trivial(3);
  CHECK(double_cosets(g, one, one).size() == 6);
  CHECK(double_cosets(g, g, g).size() == 1);
  CHECK(double_cosets(g, s3::V(1), s3::V(4)).size() == 1);
  // |H\G/K| summed over sizes recovers |G|
  const PermGroup g2 = s3::product_group();
  for (const auto& h : conjugacy_class_reps(g2))
    for (const auto& k : conjugacy_class_reps(g2)) {
      std::size_t covered = 0;
      for (const auto& t : double_cosets(g2, h.representative, k.representative)) {
        std::set<Permutation> cell;
        for (const auto& x : h.representative.elements())
          for (const auto& y : k.representative.elements()) cell.insert(x * t * y);
        covered += cell.size();
      }
      CHECK(covered == g2.order());
    }
}

TEST_CASE("group specs") {
  CHECK(parse_group_spec("S3xS3").order() == 36);
  CHECK(parse_group_spec("S3").order() == 6);
  CHECK(parse_group_spec("C1").order() == 1);
  CHECK(parse_group_spec("C3").order() == 3);
  CHECK(parse_group_spec("(1,2),(1,2,3,4)").order() == 24);
  CHECK_THROWS(parse_group_spec("S3xQ8"));
}
