#include <gtest/gtest.h>

#include "gammalab/classify.hpp"
#include "gammalab/errors.hpp"

using namespace gammalab;

namespace {

Group zmod(long n) { return Group::cyclic(Int(n)); }
const Group klein = Group(2, IntMatrix{{2, 0}, {0, 2}});

const ClassificationPiece& piece(const ClassificationReport& r, const std::string& label) {
  for (const auto& p : r.pieces)
    if (p.label == label) return p;
  throw std::runtime_error("missing piece " + label);
}

// Quadratic maps B → Z/n counted over all tables.
long brute_quadratic_count(const Group& b, long n) {
  FiniteGroup fb(b);
  const std::size_t m = fb.size();
  std::vector<long> q(m, 0);
  long count = 0;
  for (;;) {
    bool ok = true;
    for (std::size_t x = 0; x < m && ok; ++x) ok = q[fb.neg(x)] == q[x];
    auto phi = [&](std::size_t x, std::size_t y) { return ((q[fb.add(x, y)] - q[x] - q[y]) % n + n) % n; };
    for (std::size_t x = 0; x < m && ok; ++x)
      for (std::size_t y = 0; y < m && ok; ++y)
        for (std::size_t z = 0; z < m && ok; ++z) ok = phi(fb.add(x, y), z) == (phi(x, z) + phi(y, z)) % n;
    if (ok) ++count;
    std::size_t pos = 1;
    while (pos < m && ++q[pos] == n) q[pos++] = 0;
    if (pos >= m) break;
  }
  return count;
}

}  // namespace

TEST(Classify, LowDegreesAreHomAndExt) {
  for (const auto& b : {zmod(2), zmod(4), zmod(6), klein, Group::free(1)})
    for (const auto& a : {zmod(2), zmod(3), zmod(4), Group::free(1)}) {
      EXPECT_TRUE(cohomology_K2(b, a, 2).total.isomorphic(hom_group(b, a).group));
      EXPECT_TRUE(cohomology_K2(b, a, 3).total.isomorphic(ext1(b, a)));
      EXPECT_TRUE(piece(cohomology_K2(b, a, 2), "Hom(B,A)").group.isomorphic(hom_group(b, a).group));
      EXPECT_TRUE(piece(cohomology_K2(b, a, 3), "Ext¹(B,A)").group.isomorphic(ext1(b, a)));
    }
}

TEST(Classify, DegreeFour) {
  auto r = cohomology_K2(zmod(2), zmod(4), 4);
  EXPECT_TRUE(r.total.isomorphic(zmod(4)));
  EXPECT_TRUE(piece(r, "Hom(Γ₂B,A)").group.isomorphic(zmod(4)));
  EXPECT_TRUE(piece(r, "Ext²(B,A)").sheaf_only);
  EXPECT_TRUE(cohomology_K2(Group::free(1), Group::free(1), 4).total.isomorphic(Group::free(1)));
}

TEST(Classify, DegreeFourCountsQuadraticMaps) {
  for (const auto& b : {zmod(2), zmod(3), zmod(4), klein, zmod(5)})
    for (long n = 2; n <= 6; ++n)
      EXPECT_EQ(cohomology_K2(b, zmod(n), 4).total.order(), Int(brute_quadratic_count(b, n)))
          << b.describe() << " Z/" << n;
}

TEST(Classify, DegreeFive) {
  auto r = cohomology_K2(zmod(2), zmod(2), 5);
  const Group& e = piece(r, "Ext¹(LΓ₂B,A)").group;
  // Hom(L₁Γ₂B, A) and Ext¹(Γ₂B, A) both contribute.
  const Group l1 = l_derived(FunctorId::Gamma2, zmod(2), 1);
  EXPECT_EQ(e.order(), ext1(apply(FunctorId::Gamma2, zmod(2)).group, zmod(2)).order() *
                           hom_group(l1, zmod(2)).group.order());
  EXPECT_EQ(r.total.order(), Int(4));
}

TEST(Classify, VanishingPiecesInDegreeSeven) {
  for (const auto& b : {zmod(2), zmod(3), zmod(4), klein})
    for (const auto& a : {zmod(2), zmod(3), zmod(4)}) {
      auto r = cohomology_K2(b, a, 7);
      EXPECT_TRUE(piece(r, "Ext³(LΓ₂B,A)").group.is_trivial());
      EXPECT_TRUE(piece(r, "Ext⁵(B,A)").group.is_trivial());
      EXPECT_TRUE(piece(r, "Ext⁵(B,A)").sheaf_only);
      EXPECT_NO_THROW(piece(r, "Ext¹(LΓ₃B,A)"));
    }
  auto r = cohomology_K2(zmod(2), zmod(2), 7);
  EXPECT_TRUE(piece(r, "Ext¹(LΓ₃B,A)").group.isomorphic(klein));
}

TEST(Classify, ConsistencyOverBattery) {
  const std::vector<Group> bs = {zmod(2), zmod(3), zmod(4), klein, zmod(6), Group::free(1)};
  const std::vector<Group> as = {zmod(2), zmod(3), zmod(4), Group::free(1)};
  for (const auto& b : bs)
    for (const auto& a : as)
      for (int n = 2; n <= 7; ++n) {
        auto c = consistency_check(b, a, n);
        EXPECT_TRUE(c.pass) << b.describe() << " " << a.describe() << " n=" << n << " " << c.detail;
      }
  EXPECT_TRUE(consistency_check(Group::free(1), Group::free(1), 4).pass);
  EXPECT_TRUE(consistency_check(zmod(3), zmod(3), 6).pass);
  EXPECT_THROW(cohomology_K2(zmod(2), zmod(2), 8), InputError);
}
