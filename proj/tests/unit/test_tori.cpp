#include <gtest/gtest.h>

#include <algorithm>

#include "galcoh/cohomology.hpp"
#include "galcoh/errors.hpp"
#include "galcoh/tori.hpp"

using namespace galcoh;

namespace {

AbelianPresentation P(const std::string& s) { return AbelianPresentation::parse(s); }

std::vector<Subgroup> of_order(const GroupPtr& g, std::size_t n) {
  std::vector<Subgroup> out;
  for (const auto& h : g->all_subgroups())
    if (h.order() == n) out.push_back(h);
  return out;
}

}  // namespace

TEST(Tori, NormOneTorusOfKleinFour) {
  auto g = FiniteGroup::klein_four();
  auto no = norm_one_torus(g);
  EXPECT_EQ(no.torus.rank(), 3u);
  EXPECT_EQ(no.sequence.middle(), GLattice::regular(g));
  EXPECT_TRUE(no.middle_certificate.verify(no.sequence.middle()));
  EXPECT_EQ(cohomology(no.torus.characters(), 1).presentation(), P("Z/2 x Z/2"));
  EXPECT_EQ(cohomology(no.torus.characters(), 2).presentation(), P("Z/2"));
}

TEST(Tori, MultinormTorus) {
  auto g = FiniteGroup::klein_four();
  auto mn = multinorm_torus(g, of_order(g, 2));
  EXPECT_EQ(mn.torus.rank(), 5u);
  EXPECT_EQ(mn.sequence.middle().rank(), 6u);
  EXPECT_TRUE(mn.middle_certificate.verify(mn.sequence.middle()));
  EXPECT_EQ(cohomology(mn.torus.characters(), 2).presentation(), P("Z/4"));
}

TEST(Tori, ComparisonSequence) {
  auto g = FiniteGroup::klein_four();
  auto hs = of_order(g, 2);
  ShortExactSequence s = multinorm_comparison(norm_one_torus(g), multinorm_torus(g, hs), hs);
  EXPECT_EQ(s.sub().rank(), 3u);
  EXPECT_EQ(s.middle().rank(), 5u);
  EXPECT_EQ(s.quotient(), GLattice::trivial(g, 2));
  // unequal orders are rejected
  std::vector<Subgroup> mixed{hs[0], g->whole()};
  EXPECT_THROW(multinorm_comparison(norm_one_torus(g), multinorm_torus(g, mixed), mixed), DomainError);
}

TEST(Tori, CertificateTamperingIsDetected) {
  auto g = FiniteGroup::cyclic(4);
  auto [t, cert] = quasi_trivial(g, {g->trivial_subgroup(), Subgroup(g, {0, 2})});
  EXPECT_EQ(t.rank(), 6u);
  EXPECT_TRUE(cert.verify(t.characters()));
  PermutationCertificate swapped = cert;
  std::swap(swapped.summands[0], swapped.summands[1]);
  EXPECT_FALSE(swapped.verify(t.characters()));
  PermutationCertificate scaled = cert;
  scaled.basis(0, 0) = 2;
  EXPECT_FALSE(scaled.verify(t.characters()));
}

TEST(Tori, FlasqueTests) {
  auto g = FiniteGroup::klein_four();
  EXPECT_TRUE(is_flasque(GLattice::regular(g)).verdict);
  EXPECT_TRUE(is_flasque(GLattice::trivial(g, 2)).verdict);
  FlasqueReport q = is_flasque(norm_one_torus(g).torus.characters());
  EXPECT_FALSE(q.verdict);
  ASSERT_EQ(q.entries.size(), 5u);
  EXPECT_TRUE(q.entries[0].group.is_trivial());
  EXPECT_EQ(q.entries[4].group, P("Z/4"));
  EXPECT_TRUE(is_coflasque(GLattice::regular(g)).verdict);
  EXPECT_FALSE(is_coflasque(GLattice::sign(g)).verdict);
}

TEST(Tori, FlasqueResolutionOfNormOneTorus) {
  auto g = FiniteGroup::klein_four();
  FlasqueResolution r = flasque_resolution(norm_one_torus(g).torus);
  EXPECT_TRUE(r.verify());
  EXPECT_EQ(r.sequence.middle().rank(), 18u);
  EXPECT_EQ(r.sequence.quotient().rank(), 15u);
  EXPECT_TRUE(r.flasque_certificate.verdict);
  EXPECT_EQ(cohomology(r.sequence.quotient(), 1).presentation(), P("Z/2"));
  EXPECT_EQ(r.cover_order, g->all_subgroups());
}

TEST(Tori, CoverOrderValidation) {
  auto g = FiniteGroup::klein_four();
  Torus t = norm_one_torus(g).torus;
  auto hs = g->all_subgroups();
  std::vector<Subgroup> missing(hs.begin(), hs.end() - 1);
  EXPECT_THROW(flasque_resolution(t, missing), DomainError);
  std::vector<Subgroup> repeated = hs;
  repeated[1] = repeated[2];
  EXPECT_THROW(flasque_resolution(t, repeated), DomainError);
  std::reverse(hs.begin(), hs.end());
  FlasqueResolution r = flasque_resolution(t, hs);
  EXPECT_TRUE(r.verify());
  EXPECT_EQ(cohomology(r.sequence.quotient(), 1).presentation(), P("Z/2"));
}

TEST(Tori, BrauerInvariant) {
  auto v = FiniteGroup::klein_four();
  BrauerInvariant b = br_invariant(norm_one_torus(v).torus);
  EXPECT_EQ(b.group, P("Z/2"));
  EXPECT_TRUE(b.order_independent);
  // cyclic norm-one tori are retract rational: the invariant vanishes
  for (std::size_t n : {2, 3, 4, 6}) EXPECT_TRUE(br_invariant(norm_one_torus(FiniteGroup::cyclic(n)).torus).group.is_trivial());
  auto [qt, cert] = quasi_trivial(v, of_order(v, 2));
  BrauerInvariant q = br_invariant(qt);
  EXPECT_TRUE(q.group.is_trivial());
  EXPECT_TRUE(q.order_independent);
}
