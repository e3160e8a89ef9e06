#include <gtest/gtest.h>

#include <algorithm>

#include "gencov/error.hpp"
#include "gencov/group.hpp"
#include "testkit/families.hpp"
#include "testkit/generators.hpp"
#include "testkit/oracles.hpp"

using namespace gencov;
using testkit::ElementSet;

namespace
{

ErrorCode code_of(auto &&f)
{
  try {
    f();
  } catch (Error const &e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

} // namespace

TEST(Group, OrdersOfStandardGroups)
{
  EXPECT_EQ(testkit::symmetric_group(3).order(), 6u);
  EXPECT_EQ(testkit::symmetric_group(4).order(), 24u);
  EXPECT_EQ(testkit::dihedral_group(6).order(), 12u);
  EXPECT_EQ(testkit::cyclic_group(7).order(), 7u);
  EXPECT_EQ(Group::trivial(5).order(), 1u);
  Group g = Group::generate(6, {testkit::s6_sigma(), testkit::s6_rho()});
  EXPECT_EQ(g.order(), 6u);
}

TEST(Group, ElementsAreSortedAndSearchable)
{
  Group g = testkit::symmetric_group(4);
  auto elems = g.elements();
  EXPECT_TRUE(std::is_sorted(elems.begin(), elems.end()));
  for (std::size_t i = 0; i < g.order(); ++i)
    EXPECT_EQ(g.index_of(g.element(i)), i);
  EXPECT_FALSE(g.contains(Perm(5)));
}

TEST(Group, ErrorsCarryTheirCodes)
{
  EXPECT_EQ(code_of([] { Group::generate(3, {Perm(4)}); }), ErrorCode::DegreeMismatch);
  EXPECT_EQ(code_of([] { Group::generate(9, {Perm::parse("(1 2 3 4 5 6 7 8 9)", 9),
                                             Perm::parse("(1 2)", 9)}, 1000); }),
            ErrorCode::OrderCapExceeded);
  Group c4 = testkit::cyclic_group(4);
  Group s3on4 = Group::generate(4, {Perm::parse("(1 2 3)", 4)});
  EXPECT_EQ(code_of([&] { right_cosets(s3on4, c4); }), ErrorCode::NotASubgroup);
  EXPECT_EQ(code_of([&] { generated_by(c4, {Perm::parse("(1 2)", 4)}); }),
            ErrorCode::NotInAmbientGroup);
  CosetTable table(Group::trivial(4), c4);
  EXPECT_EQ(code_of([&] { table.coset_of(Perm::parse("(1 2)", 4)); }), ErrorCode::NotInGroup);
}

TEST(Group, CoreOfAPointStabiliserInS3IsTrivial)
{
  Group s3 = testkit::symmetric_group(3);
  Group stab = Group::generate(3, {Perm::parse("(2 3)", 3)});
  EXPECT_TRUE(core(stab, s3).is_trivial());
  Group a3 = Group::generate(3, {Perm::parse("(1 2 3)", 3)});
  EXPECT_TRUE(core(a3, s3) == a3);
  EXPECT_TRUE(is_normal(a3, s3));
  EXPECT_FALSE(is_normal(stab, s3));
}

TEST(GroupProperty, CosetsPartitionTheGroup)
{
  testkit::Rng rng(11);
  auto menu = testkit::small_groups(24);
  for (int i = 0; i < 200; ++i) {
    Group g = rng.pick(menu).group;
    Group h = testkit::random_subgroup(rng, g);
    auto cosets = right_cosets(h, g);
    EXPECT_EQ(cosets.size() * h.order(), g.order());
    ElementSet covered;
    for (auto const &c : cosets) {
      ElementSet set = testkit::coset_set(h, c.representative);
      EXPECT_EQ(set.front(), c.representative);
      EXPECT_EQ(canonical_representative(h, set.back()), c.representative);
      covered.insert(covered.end(), set.begin(), set.end());
    }
    std::sort(covered.begin(), covered.end());
    EXPECT_EQ(covered, testkit::sorted_elements(g));

    CosetTable table(h, g);
    ASSERT_EQ(table.coset_count(), cosets.size());
    for (Perm const &x : g.elements()) {
      std::size_t c = table.coset_of(x);
      EXPECT_EQ(table.representative(c), testkit::coset_set(h, x).front());
    }
  }
}

TEST(GroupProperty, ConjugateIntersectionAndCoreMatchLiteralSets)
{
  testkit::Rng rng(12);
  auto menu = testkit::small_groups(24);
  for (int i = 0; i < 200; ++i) {
    Group g = rng.pick(menu).group;
    Group a = testkit::random_subgroup(rng, g);
    Group b = testkit::random_subgroup(rng, g);
    Perm x = rng.element(g);

    ElementSet conj;
    for (Perm const &p : a.elements())
      conj.push_back(x.inverse() * p * x);
    std::sort(conj.begin(), conj.end());
    EXPECT_EQ(testkit::sorted_elements(conjugate(a, x)), conj);

    ElementSet meet;
    for (Perm const &p : a.elements())
      if (b.contains(p))
        meet.push_back(p);
    EXPECT_EQ(testkit::sorted_elements(intersection(a, b)), meet);

    Group c = core(a, g);
    EXPECT_EQ(testkit::sorted_elements(c), testkit::literal_core(a, g));
    EXPECT_TRUE(is_normal(c, g));
    EXPECT_TRUE(c.is_subgroup_of(a));
  }
}

TEST(GroupProperty, GeneratedByContainsItsParts)
{
  testkit::Rng rng(13);
  auto menu = testkit::small_groups(24);
  for (int i = 0; i < 100; ++i) {
    Group g = rng.pick(menu).group;
    Group a = testkit::random_subgroup(rng, g);
    Perm x = rng.element(g);
    Group j = generated_by(g, {a, x});
    EXPECT_TRUE(a.is_subgroup_of(j));
    EXPECT_TRUE(j.contains(x));
    EXPECT_EQ(g.order() % j.order(), 0u);
    // Least such subgroup: generated by a's generators and x.
    std::vector<Perm> gens = a.generators();
    gens.push_back(x);
    EXPECT_TRUE(j == Group::generate(g.degree(), gens));
  }
}
