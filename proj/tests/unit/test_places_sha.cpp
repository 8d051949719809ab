#include <gtest/gtest.h>

#include "galcoh/errors.hpp"
#include "galcoh/places_sha.hpp"
#include "galcoh/tori.hpp"

using namespace galcoh;

namespace {

AbelianPresentation P(const std::string& s) { return AbelianPresentation::parse(s); }

PlaceFamily order_two(const GroupPtr& g) {
  std::vector<Place> places;
  for (const auto& h : g->all_subgroups())
    if (h.order() == 2) places.push_back({"v" + std::to_string(places.size()), h});
  return PlaceFamily(g, "order_two", places);
}

}  // namespace

TEST(PlaceFamily, Validation) {
  auto g = FiniteGroup::klein_four();
  EXPECT_THROW(PlaceFamily(g, "f", {{"", g->whole()}}), DomainError);
  auto other = FiniteGroup::cyclic(4);
  EXPECT_THROW(PlaceFamily(g, "f", {{"v", other->whole()}}), DomainError);
  EXPECT_EQ(order_two(g).decomposition_groups().size(), 3u);
}

TEST(Sha, KleinFourNormOneTorus) {
  auto g = FiniteGroup::klein_four();
  PlaceFamily f = order_two(g);
  GLattice q = norm_one_torus(g).torus.characters();
  ShaGroup s1 = sha_kernel(q, 1, f), s2 = sha_kernel(q, 2, f);
  EXPECT_TRUE(s1.presentation().is_trivial());
  EXPECT_EQ(s2.presentation(), P("Z/2"));
  EXPECT_TRUE(s2.verify());
  ASSERT_EQ(s2.witnesses().size(), 1u);
  EXPECT_FALSE(s2.ambient().is_coboundary(s2.witnesses()[0]));
  EXPECT_TRUE(s2.inclusion().is_injective());
  EXPECT_TRUE(sha_kernel(q, 3, f).presentation().is_trivial());
}

TEST(Sha, FlasqueQuotientAndMultinorm) {
  auto g = FiniteGroup::klein_four();
  PlaceFamily f = order_two(g);
  FlasqueResolution r = flasque_resolution(norm_one_torus(g).torus);
  EXPECT_EQ(sha_kernel(r.sequence.quotient(), 1, f).presentation(), P("Z/2"));
  EXPECT_TRUE(sha_kernel(r.sequence.quotient(), 2, f).presentation().is_trivial());
  std::vector<Subgroup> hs = f.decomposition_groups();
  GLattice qt = multinorm_torus(g, hs).torus.characters();
  ShaGroup s = sha_kernel(qt, 2, f);
  EXPECT_EQ(s.presentation(), P("Z/2"));
  EXPECT_TRUE(s.verify());
}

TEST(Sha, ExtremeFamilies) {
  auto g = FiniteGroup::dihedral(3);
  GLattice m = GLattice::sign(g);
  // no places: everything survives
  EXPECT_EQ(sha_kernel(m, 2, PlaceFamily(g, "none", {})).presentation(), cohomology(m, 2).presentation());
  // a place with full decomposition group kills everything
  EXPECT_TRUE(sha_kernel(m, 2, PlaceFamily(g, "full", {{"v", g->whole()}})).presentation().is_trivial());
  // degree 0: restriction to the trivial subgroup is injective on M^G
  auto c2 = FiniteGroup::cyclic(2);
  EXPECT_TRUE(sha_kernel(GLattice::trivial(c2, 1), 0, PlaceFamily(c2, "one", {{"v", c2->trivial_subgroup()}}))
                  .presentation()
                  .is_trivial());
}

TEST(Sha, CyclicGroupsWithACyclicPlace) {
  // For cyclic G every family containing G itself has trivial Sha; with only proper
  // decomposition groups the generic class of H^2(G, Z) = Z/n survives when n is a prime power.
  for (std::size_t n = 2; n <= 8; ++n) {
    auto g = FiniteGroup::cyclic(n);
    GLattice z = GLattice::trivial(g, 1);
    std::vector<Place> proper;
    for (const auto& h : g->all_subgroups())
      if (h.order() < n) proper.push_back({"v" + std::to_string(h.order()), h});
    auto with_whole = proper;
    with_whole.push_back({"w", g->whole()});
    EXPECT_TRUE(sha_kernel(z, 2, PlaceFamily(g, "all", with_whole)).presentation().is_trivial()) << n;
    const bool prime_power = n == 2 || n == 3 || n == 4 || n == 5 || n == 7 || n == 8;
    EXPECT_EQ(sha_kernel(z, 2, PlaceFamily(g, "proper", proper)).presentation().is_trivial(), !prime_power) << n;
  }
}

TEST(Coverage, Examples) {
  auto v = FiniteGroup::klein_four();
  EXPECT_TRUE(chebotarev_coverage(v, order_two(v)).covered);
  auto c4 = FiniteGroup::cyclic(4);
  CoverageReport r = chebotarev_coverage(c4, PlaceFamily(c4, "half", {{"v", Subgroup(c4, {0, 2})}}));
  EXPECT_FALSE(r.covered);
  ASSERT_EQ(r.uncovered.size(), 1u);
  EXPECT_EQ(r.uncovered[0], c4->whole());
  // conjugates count: one reflection subgroup of D3 covers the other two
  auto d3 = FiniteGroup::dihedral(3);
  CoverageReport d = chebotarev_coverage(d3, PlaceFamily(d3, "mixed", {{"s", d3->generated_by({3})},
                                                                     {"r", d3->generated_by({1})}}));
  EXPECT_TRUE(d.covered);
}

TEST(Transfer, FlasqueAndComparison) {
  auto g = FiniteGroup::klein_four();
  PlaceFamily f = order_two(g);
  auto no = norm_one_torus(g);
  TransferReport fl = sha_les_transfer(flasque_resolution(no.torus).sequence, 1, f);
  EXPECT_EQ(fl.sha_quotient.presentation(), P("Z/2"));
  EXPECT_EQ(fl.sha_sub.presentation(), P("Z/2"));
  EXPECT_TRUE(fl.sha_middle.presentation().is_trivial());
  EXPECT_TRUE(fl.connecting_injective && fl.connecting_surjective);
  EXPECT_TRUE(fl.exact_at_middle);

  auto hs = f.decomposition_groups();
  TransferReport cmp = sha_les_transfer(multinorm_comparison(no, multinorm_torus(g, hs), hs), 1, f);
  EXPECT_TRUE(cmp.sha_quotient.presentation().is_trivial());
  EXPECT_TRUE(cmp.induced_injective && cmp.induced_surjective);
}

TEST(Transfer, SplitSequence) {
  auto g = FiniteGroup::klein_four();
  PlaceFamily f = order_two(g);
  GLattice q = norm_one_torus(g).torus.characters();
  TransferReport t = sha_les_transfer(ShortExactSequence::split(q, GLattice::trivial(g, 1)), 1, f);
  EXPECT_TRUE(t.connecting.is_zero());
  EXPECT_TRUE(t.induced_injective);
  EXPECT_EQ(t.sha_middle.presentation(), P("Z/2"));
  EXPECT_TRUE(t.exact_at_middle);
}
