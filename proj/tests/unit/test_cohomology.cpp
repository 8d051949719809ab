#include <gtest/gtest.h>

#include "galcoh/cohomology.hpp"
#include "galcoh/errors.hpp"
#include "galcoh/tori.hpp"
#include "oracle/periodic.hpp"
#include "support/suites.hpp"

using namespace galcoh;

namespace {

AbelianPresentation P(const std::string& s) { return AbelianPresentation::parse(s); }

// Equal as homomorphisms: images of every generator agree in the target group.
bool same_map(const GroupHom& a, const GroupHom& b) {
  if (a.source() != b.source() || a.target() != b.target()) return false;
  for (std::size_t j = 0; j < a.source().generator_count(); ++j) {
    IntVector e(a.source().generator_count());
    e[j] = 1;
    if (!a.target().is_zero_element(sub(a.apply(e), b.apply(e)))) return false;
  }
  return true;
}

}  // namespace

TEST(Cohomology, KleinFourIntegers) {
  auto g = FiniteGroup::klein_four();
  GLattice z = GLattice::trivial(g, 1);
  EXPECT_EQ(cohomology(z, 0).presentation(), P("Z"));
  EXPECT_EQ(cohomology(z, 1).presentation(), P("0"));
  EXPECT_EQ(cohomology(z, 2).presentation(), P("Z/2 x Z/2"));
  EXPECT_EQ(cohomology(z, 3).presentation(), P("Z/2"));
}

TEST(Cohomology, CyclicPeriodicity) {
  for (std::size_t n : {2, 3, 5, 6}) {
    auto g = FiniteGroup::cyclic(n);
    GLattice z = GLattice::trivial(g, 1);
    EXPECT_EQ(cohomology(z, 1).presentation(), P("0"));
    EXPECT_EQ(cohomology(z, 2).presentation(), AbelianPresentation::cyclic(n));
    EXPECT_EQ(cohomology(z, 3).presentation(), P("0"));
  }
  GLattice sign = GLattice::sign(FiniteGroup::cyclic(2));
  EXPECT_EQ(cohomology(sign, 0).presentation(), P("0"));
  EXPECT_EQ(cohomology(sign, 1).presentation(), P("Z/2"));
  EXPECT_EQ(cohomology(sign, 2).presentation(), P("0"));
  EXPECT_EQ(cohomology(sign, 3).presentation(), P("Z/2"));
}

TEST(Cohomology, InducedModulesAreAcyclic) {
  auto g = FiniteGroup::dihedral(3);
  for (std::size_t k = 1; k <= 3; ++k) EXPECT_TRUE(cohomology(GLattice::regular(g), k).presentation().is_trivial());
}

TEST(Cohomology, GeneratorsAndCoordinates) {
  auto g = FiniteGroup::klein_four();
  CohomologyGroup h(GLattice::trivial(g, 1), 2);
  for (std::size_t j = 0; j < h.generators().size(); ++j) {
    IntVector e(h.generators().size());
    e[j] = 1;
    EXPECT_EQ(h.coordinates(h.generators()[j]), e);
    EXPECT_FALSE(h.is_coboundary(h.generators()[j]));
  }
  // the coboundary of any 1-cochain has coordinates zero
  IntVector f(h.cochain_dimension() / g->order());
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = static_cast<long>(i * i) - 3;
  IntVector df = apply_coboundary(h.module(), 1, f);
  EXPECT_TRUE(h.presentation().is_zero_element(h.coordinates(df)));
  auto x = h.solve_coboundary(df);
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(apply_coboundary(h.module(), 1, *x), df);
  // twice a generator plus a coboundary is zero in (Z/2)^2
  IntVector two = h.generators()[0];
  for (std::size_t i = 0; i < two.size(); ++i) two[i] = 2 * two[i] + df[i];
  EXPECT_TRUE(h.is_coboundary(two));
  // not a cocycle
  IntVector bad(h.cochain_dimension());
  bad[5] = 1;
  EXPECT_THROW(h.coordinates(bad), DomainError);
}

TEST(Cohomology, CapsAreEnforced) {
  auto g = FiniteGroup::cyclic(8);
  CochainLimits small{3, 1000};
  EXPECT_THROW(CohomologyGroup(GLattice::regular(g), 2, small), CapExceeded);
  try {
    CohomologyGroup(GLattice::regular(g), 2, small);
  } catch (const CapExceeded& e) {
    EXPECT_NE(std::string(e.what()).find("4096"), std::string::npos);
  }
  EXPECT_THROW(CohomologyGroup(GLattice::trivial(g, 1), 4), CapExceeded);
  EXPECT_NO_THROW(CohomologyGroup(GLattice::trivial(g, 1), 4, CochainLimits{4, 1 << 20}));
}

TEST(Tate, LowDegrees) {
  auto c5 = FiniteGroup::cyclic(5);
  EXPECT_EQ(tate_h0(GLattice::trivial(c5, 1)), P("Z/5"));
  EXPECT_EQ(tate_h_minus1(GLattice::trivial(c5, 1)), P("0"));
  EXPECT_EQ(tate_h_minus1(GLattice::sign(FiniteGroup::cyclic(2))), P("Z/2"));
  auto v = FiniteGroup::klein_four();
  EXPECT_EQ(tate_h_minus1(GLattice::trivial(v, 1)), P("0"));
  EXPECT_EQ(tate_h0(GLattice::trivial(v, 1)), P("Z/4"));
  EXPECT_TRUE(tate_h0(GLattice::regular(v)).is_trivial());
  EXPECT_TRUE(tate_h_minus1(GLattice::regular(v)).is_trivial());
  // dimension shift along 0 -> Z -> Z[G] -> Z[G]/Z.N -> 0
  GLattice q = norm_one_torus(v).torus.characters();
  EXPECT_EQ(tate_h_minus1(q), P("Z/4"));
  EXPECT_EQ(tate_cohomology(GLattice::trivial(v, 1), 2), P("Z/2 x Z/2"));
  EXPECT_THROW(tate_cohomology(GLattice::trivial(v, 1), -2), DomainError);
}

TEST(Maps, RestrictionCorestriction) {
  auto g = FiniteGroup::cyclic(4);
  Subgroup h(g, {0, 2});
  GLattice z = GLattice::trivial(g, 1);
  CohomologyGroup whole(z, 2), sub(z.restrict(h), 2);
  GroupHom res = restriction(whole, sub, h);
  GroupHom cor = corestriction(sub, whole, h);
  // Z/4 -> Z/2 is onto, Z/2 -> Z/4 is multiplication by 2
  EXPECT_TRUE(res.is_surjective());
  EXPECT_TRUE(cor.is_injective());
  EXPECT_TRUE(same_map(res.then(cor), GroupHom::multiplication(whole.presentation(), 2)));
  EXPECT_TRUE(same_map(cor.then(res), GroupHom::multiplication(sub.presentation(), 2)));
}

TEST(Maps, CorestrictionNonAbelian) {
  auto g = FiniteGroup::dihedral(3);
  GLattice m = GLattice::sign(g);
  for (const auto& h : g->all_subgroups())
    for (std::size_t k = 0; k <= 3; ++k) {
      CohomologyGroup whole(m, k), sub(m.restrict(h), k);
      EXPECT_TRUE(same_map(restriction(whole, sub, h).then(corestriction(sub, whole, h)),
                           GroupHom::multiplication(whole.presentation(), static_cast<long>(h.index()))))
          << h.to_string() << " degree " << k;
    }
}

TEST(Maps, InflationRestrictionSequence) {
  // 0 -> H^1(G/N, M^N) -> H^1(G, M) -> H^1(N, M)
  auto g = FiniteGroup::cyclic(4);
  Subgroup n(g, {0, 2});
  GLattice m = GLattice::sign(g);
  FixedLattice f = fixed_lattice(m, n);
  CohomologyGroup q(f.lattice, 1), whole(m, 1), sub(m.restrict(n), 1);
  GroupHom inf = inflation(q, whole, n);
  GroupHom res = restriction(whole, sub, n);
  EXPECT_TRUE(inf.is_injective());
  EXPECT_TRUE(is_exact(inf, res));
}

TEST(Maps, ConnectingOnNormSequence) {
  auto g = FiniteGroup::klein_four();
  auto no = norm_one_torus(g);
  CohomologyGroup h2(no.torus.characters(), 2), h3(no.sequence.sub(), 3);
  GroupHom d = connecting(no.sequence, h2, h3);
  EXPECT_TRUE(d.is_isomorphism());
  EXPECT_EQ(d.source(), P("Z/2"));
  // lifted, differentiated and pulled back cocycle is a cocycle
  IntVector a = connecting_cocycle(no.sequence, 2, h2.generators()[0]);
  EXPECT_TRUE(is_zero(apply_coboundary(no.sequence.sub(), 3, a)));
}

TEST(Maps, LongExactSequenceOfNormSequence) {
  for (auto g : {FiniteGroup::cyclic(6), FiniteGroup::dihedral(4)}) {
    suites::SuiteResult r;
    suites::check_long_exact_sequence(norm_one_torus(g).sequence, 3, r, "norm");
    EXPECT_TRUE(r.passed()) << r.summary();
  }
}

TEST(Maps, RandomLongExactSequences) {
  std::mt19937_64 rng(7);
  suites::SuiteResult r;
  for (int i = 0; i < 4; ++i) {
    auto g = i % 2 ? FiniteGroup::klein_four() : FiniteGroup::dihedral(3);
    suites::check_long_exact_sequence(suites::random_ses(g, rng, 3), 2, r, "random " + std::to_string(i));
  }
  EXPECT_TRUE(r.passed()) << r.summary();
}

TEST(Shapiro, PermutationLattices) {
  auto g = FiniteGroup::dihedral(4);
  for (const auto& h : g->all_subgroups())
    for (int d = -1; d <= 2; ++d) EXPECT_TRUE(shapiro_check(g, h, d)) << h.to_string() << " degree " << d;
}

TEST(Oracle, AgreesOnSmallCases) {
  for (auto g : {FiniteGroup::cyclic(6), FiniteGroup::klein_four(),
                 FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(4))}) {
    auto res = oracle::TensorResolution::for_group(g);
    for (const auto& [name, m] : suites::standard_coefficients(g))
      for (std::size_t k = 0; k <= 3; ++k)
        EXPECT_EQ(cohomology(m, k).presentation(), res.cohomology(m, k).presentation())
            << g->order() << " " << name << " H^" << k;
  }
}

TEST(Oracle, BoundariesCompose) {
  auto g = FiniteGroup::direct_product(FiniteGroup::cyclic(3), FiniteGroup::cyclic(2));
  auto res = oracle::TensorResolution::for_group(g);
  for (std::size_t k = 2; k <= 4; ++k) EXPECT_TRUE((res.boundary(k - 1) * res.boundary(k)).is_zero());
}
