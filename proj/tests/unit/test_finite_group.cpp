#include <gtest/gtest.h>

#include <algorithm>

#include "galcoh/errors.hpp"
#include "galcoh/finite_group.hpp"

using namespace galcoh;

namespace {

std::size_t count_of_order(const std::vector<Subgroup>& hs, std::size_t n) {
  return static_cast<std::size_t>(std::count_if(hs.begin(), hs.end(), [n](const Subgroup& h) { return h.order() == n; }));
}

}  // namespace

TEST(FiniteGroup, CyclicBasics) {
  auto g = FiniteGroup::cyclic(6);
  EXPECT_EQ(g->order(), 6u);
  EXPECT_EQ(g->identity(), 0u);
  EXPECT_EQ(g->mul(4, 5), 3u);
  EXPECT_EQ(g->inverse(2), 4u);
  EXPECT_EQ(g->element_order(2), 3u);
  EXPECT_TRUE(g->is_abelian());
  EXPECT_EQ(g->all_subgroups().size(), 4u);
  EXPECT_EQ(g->generators(), std::vector<std::size_t>{1});
}

TEST(FiniteGroup, TrivialGroup) {
  auto g = FiniteGroup::trivial();
  EXPECT_EQ(g->order(), 1u);
  EXPECT_EQ(g->all_subgroups().size(), 1u);
  EXPECT_TRUE(g->generators().empty());
}

TEST(FiniteGroup, SubgroupCounts) {
  EXPECT_EQ(FiniteGroup::klein_four()->all_subgroups().size(), 5u);
  EXPECT_EQ(FiniteGroup::dihedral(3)->all_subgroups().size(), 6u);
  auto d4 = FiniteGroup::dihedral(4)->all_subgroups();
  EXPECT_EQ(d4.size(), 10u);
  EXPECT_EQ(count_of_order(d4, 2), 5u);
  EXPECT_EQ(count_of_order(d4, 4), 3u);
  auto q8 = FiniteGroup::quaternion();
  EXPECT_EQ(q8->all_subgroups().size(), 6u);
  EXPECT_EQ(q8->cyclic_subgroups().size(), 5u);
  EXPECT_FALSE(q8->is_abelian());
  auto c2cubed = FiniteGroup::direct_product(FiniteGroup::klein_four(), FiniteGroup::cyclic(2));
  EXPECT_EQ(c2cubed->all_subgroups().size(), 16u);
}

TEST(FiniteGroup, SubgroupOrderingIsSizeThenLex) {
  auto hs = FiniteGroup::klein_four()->all_subgroups();
  ASSERT_EQ(hs.size(), 5u);
  EXPECT_EQ(hs[0].to_string(), "{0}");
  EXPECT_EQ(hs[1].to_string(), "{0,1}");
  EXPECT_EQ(hs[2].to_string(), "{0,2}");
  EXPECT_EQ(hs[3].to_string(), "{0,3}");
  EXPECT_EQ(hs[4].to_string(), "{0,1,2,3}");
}

TEST(FiniteGroup, SubgroupValidation) {
  auto g = FiniteGroup::cyclic(4);
  EXPECT_NO_THROW(Subgroup(g, {0, 2}));
  try {
    Subgroup(g, {0, 1});
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("not closed"), std::string::npos);
  }
  EXPECT_THROW(Subgroup(g, {0, 7}), DomainError);
}

TEST(FiniteGroup, NormalityAndConjugation) {
  auto d3 = FiniteGroup::dihedral(3);
  std::size_t normal = 0;
  for (const auto& h : d3->all_subgroups()) normal += h.is_normal();
  EXPECT_EQ(normal, 3u);  // 1, rotations, whole
  Subgroup reflection = d3->generated_by({3});
  EXPECT_FALSE(reflection.is_normal());
  bool moved = false;
  for (std::size_t x = 0; x < d3->order(); ++x) moved = moved || !(reflection.conjugate(x) == reflection);
  EXPECT_TRUE(moved);
  EXPECT_TRUE(d3->is_conjugate_contained(d3->generated_by({4}), {reflection}));
}

TEST(FiniteGroup, CosetsAndTransversal) {
  auto g = FiniteGroup::dihedral(4);
  Subgroup h = g->generated_by({4});
  auto cs = g->cosets(h);
  ASSERT_EQ(cs.size(), 4u);
  auto t = g->transversal(h);
  for (std::size_t i = 0; i < cs.size(); ++i) {
    EXPECT_EQ(t[i], cs[i].front());
    for (auto x : cs[i]) EXPECT_TRUE(h.contains(g->mul(g->inverse(t[i]), x)));
  }
  EXPECT_EQ(h.index(), 4u);
}

TEST(FiniteGroup, TableValidation) {
  EXPECT_NO_THROW(FiniteGroup::from_table({{0, 1}, {1, 0}}));
  EXPECT_THROW(FiniteGroup::from_table({{0, 1}, {1, 1}}), DomainError);
  EXPECT_THROW(FiniteGroup::from_table({{0, 1}, {0, 1}}), DomainError);
  // Latin square without associativity.
  EXPECT_THROW(FiniteGroup::from_table({{0, 1, 2, 3, 4},
                                        {1, 0, 3, 4, 2},
                                        {2, 4, 0, 1, 3},
                                        {3, 2, 4, 0, 1},
                                        {4, 3, 1, 2, 0}}),
               DomainError);
}

TEST(FiniteGroup, GeneratorPermutations) {
  auto s3 = FiniteGroup::from_generator_permutations({{1, 0, 2}, {1, 2, 0}});
  EXPECT_EQ(s3->order(), 6u);
  EXPECT_FALSE(s3->is_abelian());
  // S_6 has order 720 > 256.
  EXPECT_THROW(FiniteGroup::from_generator_permutations({{1, 0, 2, 3, 4, 5}, {1, 2, 3, 4, 5, 0}}), CapExceeded);
}

TEST(FiniteGroup, SubgroupAndQuotientGroupsAreCached) {
  auto g = FiniteGroup::dihedral(4);
  Subgroup rot = g->generated_by({1});
  auto a = g->subgroup_as_group(rot), b = g->subgroup_as_group(rot);
  EXPECT_EQ(a.group, b.group);
  EXPECT_EQ(a.group->order(), 4u);
  auto q = g->quotient_group(rot);
  EXPECT_EQ(q.group->order(), 2u);
  EXPECT_EQ(q.group, g->quotient_group(rot).group);
  EXPECT_THROW(g->quotient_group(g->generated_by({4})), DomainError);
}
