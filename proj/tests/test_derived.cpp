#include <gtest/gtest.h>

#include "gammalab/derived.hpp"
#include "gammalab/errors.hpp"

using namespace gammalab;

namespace {

Group zmod(long n) { return Group::cyclic(Int(n)); }
Group z2z2() { return Group(2, IntMatrix{{2, 0}, {0, 2}}); }
Group z_plus_z2() { return Group(2, IntMatrix{{0}, {2}}); }
// Z/2 presented on two generators with relators (2, 0) and (1, 1).
Group z2_alt() { return Group(2, IntMatrix{{2, 1}, {0, 1}}); }

const FunctorId kAll[] = {FunctorId::Tensor2, FunctorId::Lambda2, FunctorId::Sym2,
                          FunctorId::Gamma2, FunctorId::Gamma3};

}  // namespace

TEST(Resolve, SimplicialIdentities) {
  for (const auto& b : {zmod(2), z_plus_z2(), z2z2(), Group::free(1)}) {
    const auto s = resolve(b, 4);
    EXPECT_FALSE(s.identity_violation().has_value()) << *s.identity_violation();
    EXPECT_FALSE(s.apply(FunctorId::Gamma2).identity_violation().has_value());
  }
}

TEST(Resolve, LevelRanks) {
  const auto s = resolve(zmod(2), 4);
  EXPECT_EQ(s.ranks, (std::vector<std::size_t>{1, 2, 3, 4, 5}));
  const auto f = resolve(Group::free(1), 3);
  EXPECT_EQ(f.ranks, (std::vector<std::size_t>{1, 1, 1, 1}));
}

TEST(Resolve, HomotopyIsB) {
  for (const auto& b : {zmod(2), zmod(6), z_plus_z2(), z2z2(), z2_alt()}) {
    const auto c = resolve(b, 5).moore_complex();
    ASSERT_TRUE(c.is_complex());
    EXPECT_TRUE(c.homology(0).group.isomorphic(b));
    for (std::size_t n = 1; n < 5; ++n) EXPECT_TRUE(c.homology(n).group.is_trivial());
  }
}

TEST(Resolve, DepthGuard) { EXPECT_THROW(resolve(zmod(2), 7), SizeGuard); }

TEST(LDerived, DegreeZeroMatchesPresentation) {
  for (const auto& b : {zmod(2), zmod(3), z_plus_z2(), z2z2(), zmod(4)})
    for (auto f : kAll)
      EXPECT_TRUE(l_derived(f, b, 0).isomorphic(apply(f, b).group))
          << functor_name(f) << " " << b.describe();
}

TEST(LDerived, VanishOnFree) {
  for (std::size_t r = 1; r <= 2; ++r)
    for (auto f : kAll)
      for (std::size_t p = 1; p <= 3; ++p)
        EXPECT_TRUE(l_derived(f, Group::free(r), p).is_trivial()) << functor_name(f) << " p=" << p;
}

TEST(LDerived, IndependentOfPresentation) {
  for (auto f : kAll)
    for (std::size_t p = 0; p <= 2; ++p)
      EXPECT_TRUE(l_derived(f, zmod(2), p).isomorphic(l_derived(f, z2_alt(), p)))
          << functor_name(f) << " p=" << p;
}

TEST(LDerived, MooreAgreesWithUnnormalized) {
  for (const auto& b : {zmod(2), zmod(3), z2z2()})
    for (auto f : {FunctorId::Gamma2, FunctorId::Lambda2, FunctorId::Gamma3}) {
      const auto u = resolve(b, 3).apply(f).unnormalized_complex();
      for (std::size_t p = 0; p <= 2; ++p)
        EXPECT_TRUE(u.homology(p).group.isomorphic(l_derived(f, b, p)))
            << functor_name(f) << " " << b.describe() << " p=" << p;
    }
}

TEST(LDerived, DegreeCap) { EXPECT_THROW(l_derived(FunctorId::Gamma2, zmod(2), 5), SizeGuard); }

TEST(HyperExt, DegreeZeroIsHom) {
  for (const auto& b : {zmod(2), zmod(3), z2z2(), Group::free(1)})
    for (const auto& a : {zmod(2), zmod(4), Group::free(1)})
      for (auto f : {FunctorId::Gamma2, FunctorId::Gamma3})
        EXPECT_TRUE(hyper_ext(f, b, a, 0).isomorphic(hom_group(l_derived(f, b, 0), a).group));
  EXPECT_TRUE(hyper_ext(FunctorId::Gamma2, zmod(2), zmod(2), 0).isomorphic(zmod(2)));
}

TEST(HyperExt, TorsionFreeVanishing) {
  for (const auto& a : {zmod(2), zmod(3), zmod(4), Group::free(1)})
    EXPECT_TRUE(hyper_ext(FunctorId::Gamma2, Group::free(1), a, 1).is_trivial());
}

TEST(HyperExt, TwoStepDecompositionOrder) {
  for (const auto& b : {zmod(2), zmod(3), zmod(4), z2z2()})
    for (const auto& a : {zmod(2), zmod(3), zmod(4)}) {
      const Group g2 = apply(FunctorId::Gamma2, b).group;
      const Group l1 = l_derived(FunctorId::Gamma2, b, 1);
      EXPECT_EQ(hyper_ext(FunctorId::Gamma2, b, a, 1).order(),
                ext1(g2, a).order() * hom_group(l1, a).group.order())
          << b.describe() << " " << a.describe();
    }
}

TEST(HyperExt, IdentityFunctorGivesClassicalExt) {
  // H^i(Hom(resolution, A)) is Hom(B, A), Ext¹(B, A), 0.
  for (const auto& b : {zmod(2), zmod(4), z_plus_z2()})
    for (const auto& a : {zmod(2), zmod(6), Group::free(1)}) {
      const auto c = resolve(b, 3).moore_complex();
      EXPECT_TRUE(cochain_cohomology(c, a, 0).isomorphic(hom_group(b, a).group));
      EXPECT_TRUE(cochain_cohomology(c, a, 1).isomorphic(ext1(b, a)));
      EXPECT_TRUE(cochain_cohomology(c, a, 2).is_trivial());
    }
}

TEST(GamLam, ExactOnBattery) {
  for (const auto& b : {zmod(2), zmod(3), zmod(4), z2z2(), zmod(6)}) {
    const LesReport r = gamlam_les(b);
    for (const auto& n : r.nodes) EXPECT_TRUE(n.exact) << b.describe() << " at " << n.where;
    EXPECT_TRUE(r.tensor_matches_tor);
    ASSERT_TRUE(r.order_balance.has_value());
    EXPECT_TRUE(*r.order_balance);
    // The homology of the unnormalized complexes agrees with the Moore route.
    EXPECT_TRUE(r.terms[3].second.isomorphic(l_derived(FunctorId::Gamma2, b, 1)));
  }
}

TEST(GamLam, TorsionFreeCollapse) {
  const LesReport r = gamlam_les(Group::free(1));
  EXPECT_TRUE(r.exact());
  for (std::size_t t = 0; t < 6; ++t) EXPECT_TRUE(r.terms[t].second.is_trivial());
  EXPECT_TRUE(r.terms[6].second.isomorphic(Group::free(1)));
  EXPECT_TRUE(r.terms[7].second.isomorphic(Group::free(1)));
  EXPECT_TRUE(r.terms[8].second.is_trivial());
}
