#include <gtest/gtest.h>

#include <random>

#include "gammalab/polyfunctors.hpp"

using namespace gammalab;

namespace {

Group zmod(long n) { return Group::cyclic(Int(n)); }

Group random_small_group(std::mt19937& rng) {
  static const std::vector<Group> pool = {zmod(1), zmod(2), zmod(3), zmod(4), Group::free(1),
                                          Group(2, IntMatrix{{2, 0}, {0, 2}}),
                                          Group(2, IntMatrix{{2, 1}, {0, 3}}), zmod(6)};
  return pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
}

// Number of quadratic maps B → Z/n found by exhaustive search over tables.
std::size_t count_quadratic_maps(const Group& b, long n) {
  FiniteGroup fb(b);
  const std::size_t m = fb.size();
  std::vector<long> q(m, 0);
  std::size_t count = 0;
  for (;;) {
    bool ok = q[0] == 0;
    for (std::size_t x = 0; x < m && ok; ++x) ok = q[fb.neg(x)] == q[x];
    auto phi = [&](std::size_t x, std::size_t y) {
      return ((q[fb.add(x, y)] - q[x] - q[y]) % n + 2 * n) % n;
    };
    for (std::size_t x = 0; x < m && ok; ++x)
      for (std::size_t y = 0; y < m && ok; ++y)
        for (std::size_t z = 0; z < m && ok; ++z)
          ok = phi(fb.add(x, y), z) == (phi(x, z) + phi(y, z)) % n;
    if (ok) ++count;
    std::size_t pos = 1;
    while (pos < m && ++q[pos] == n) q[pos++] = 0;
    if (pos >= m) break;
  }
  return count;
}

Int hom_count_to_cyclic(const Group& g, long n) {
  Int c = 1;
  for (const auto& d : g.invariant_factors()) c *= gcd(d, Int(n));
  return c;
}

}  // namespace

TEST(Apply, SmallValues) {
  EXPECT_TRUE(apply(FunctorId::Gamma2, Group::free(1)).group.isomorphic(Group::free(1)));
  EXPECT_TRUE(apply(FunctorId::Gamma2, zmod(2)).group.isomorphic(zmod(4)));
  EXPECT_TRUE(apply(FunctorId::Gamma3, zmod(3)).group.isomorphic(zmod(9)));
  EXPECT_TRUE(apply(FunctorId::Gamma3, zmod(2)).group.isomorphic(zmod(2)));
  EXPECT_TRUE(apply(FunctorId::Sym2, zmod(2)).group.isomorphic(zmod(2)));
  for (long n = 1; n <= 7; ++n) EXPECT_TRUE(apply(FunctorId::Lambda2, zmod(n)).group.is_trivial());
}

TEST(Apply, CyclicClosedForms) {
  // Γ₂(Z/n) has γ₂(e) with relations n² and 2n; Γ₃(Z/n) has n³ and 3n.
  for (long n = 1; n <= 12; ++n) {
    EXPECT_TRUE(apply(FunctorId::Gamma2, zmod(n)).group.isomorphic(
        Group::cyclic(gcd(Int(n * n), Int(2 * n)))));
    EXPECT_TRUE(apply(FunctorId::Gamma3, zmod(n)).group.isomorphic(
        Group::cyclic(gcd(Int(n * n * n), Int(3 * n)))));
    EXPECT_TRUE(apply(FunctorId::Sym2, zmod(n)).group.isomorphic(zmod(n)));
    EXPECT_TRUE(apply(FunctorId::Tensor2, zmod(n)).group.isomorphic(zmod(n)));
  }
}

TEST(Apply, TagsMatchGenerators) {
  for (auto f : {FunctorId::Tensor2, FunctorId::Lambda2, FunctorId::Sym2, FunctorId::Gamma2,
                 FunctorId::Gamma3}) {
    auto v = apply(f, Group::free(3));
    EXPECT_EQ(v.tags.size(), v.group.generators());
  }
  EXPECT_EQ(monomial_tags(FunctorId::Gamma3, 2),
            (std::vector<std::string>{"g3(e0)", "g2(e0)*e1", "e0*g2(e1)", "g3(e1)"}));
}

TEST(Universal, QuadraticMapCountsDetermineGamma2) {
  const std::vector<Group> battery = {zmod(2), zmod(3), zmod(4), Group(2, IntMatrix{{2, 0}, {0, 2}})};
  for (const auto& b : battery) {
    const Group g2 = apply(FunctorId::Gamma2, b).group;
    for (long n = 1; n <= 8; ++n)
      EXPECT_EQ(Int(count_quadratic_maps(b, n)), hom_count_to_cyclic(g2, n))
          << b.describe() << " n=" << n;
  }
}

TEST(Universal, Gamma2Properties) {
  for (const auto& b : {zmod(2), zmod(4), Group(2, IntMatrix{{2, 0}, {0, 2}}), zmod(5)}) {
    FiniteGroup fb(b);
    const Group g2 = apply(FunctorId::Gamma2, b).group;
    const auto gam = universal_gamma2(b);
    EXPECT_TRUE(g2.is_zero(gam[0]));
    auto cross = [&](std::size_t x, std::size_t y) {
      IntVector v = gam[fb.add(x, y)];
      for (std::size_t i = 0; i < v.size(); ++i) v[i] -= gam[x][i] + gam[y][i];
      return g2.reduce(v);
    };
    for (std::size_t x = 0; x < fb.size(); ++x) {
      EXPECT_EQ(gam[fb.neg(x)], gam[x]);
      for (std::size_t y = 0; y < fb.size(); ++y)
        for (std::size_t z = 0; z < fb.size(); ++z)
          EXPECT_EQ(cross(fb.add(x, y), z), g2.add(cross(x, z), cross(y, z)));
    }
  }
  const auto z2 = universal_gamma2(zmod(2));
  const Group g2 = apply(FunctorId::Gamma2, zmod(2)).group;
  EXPECT_EQ(g2.to_invariant(z2[1])[0] % 2, 1);  // generator of Z/4
}

TEST(Induced, MultiplicationByTwo) {
  Group z = Group::free(1);
  GroupHom twice(z, z, IntMatrix{{2}});
  EXPECT_EQ(induced_map(FunctorId::Gamma2, twice).matrix(), (IntMatrix{{4}}));
  EXPECT_EQ(induced_map(FunctorId::Gamma3, twice).matrix(), (IntMatrix{{8}}));
  auto id = GroupHom::identity(zmod(2));
  EXPECT_EQ(induced_map(FunctorId::Gamma2, id).matrix(), IntMatrix::identity(1));
}

TEST(Induced, RespectsComposition) {
  std::mt19937 rng(21);
  std::uniform_int_distribution<int> v(-3, 3);
  for (auto f : {FunctorId::Tensor2, FunctorId::Lambda2, FunctorId::Sym2, FunctorId::Gamma2,
                 FunctorId::Gamma3}) {
    for (int t = 0; t < 10; ++t) {
      IntMatrix a(3, 2), b(2, 3);
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
          a(i, j) = v(rng);
          b(j, i) = v(rng);
        }
      EXPECT_EQ(functor_matrix(f, a * b), functor_matrix(f, a) * functor_matrix(f, b));
    }
    EXPECT_EQ(functor_matrix(f, IntMatrix::identity(3)),
              IntMatrix::identity(monomial_count(f, 3)));
  }
}

TEST(Mult, ValuesAndCokernels) {
  auto m = mult_map(Group::free(1));
  EXPECT_EQ(m.matrix(), (IntMatrix{{3}}));
  // For B = Z/2 the cokernel is B/3B = 0: γ₂(e)⊗e ↦ 3γ₃(e) generates Γ₃(Z/2).
  EXPECT_TRUE(cokernel(mult_map(zmod(2))).is_trivial());
  EXPECT_TRUE(cokernel(mult_map(zmod(3))).isomorphic(zmod(3)));
  EXPECT_TRUE(cokernel(mult_map(zmod(6))).isomorphic(zmod(3)));
}

TEST(Sequences, ExactOnBattery) {
  const std::vector<Group> battery = {zmod(2), zmod(3), zmod(4), Group::free(1), Group::free(2),
                                      Group(2, IntMatrix{{2, 0}, {0, 2}}), zmod(6),
                                      Group(2, IntMatrix{{3, 0}, {0, 9}})};
  for (const auto& b : battery)
    for (const auto& r : check_sequences(b)) EXPECT_TRUE(r.exact()) << r.name << " " << b.describe();
  auto r = check_sequences(zmod(2));
  EXPECT_TRUE(r[0].terms[0].second.isomorphic(zmod(2)));
  EXPECT_TRUE(r[0].terms[1].second.isomorphic(zmod(4)));
  EXPECT_TRUE(r[0].terms[2].second.isomorphic(zmod(2)));
}

TEST(CrossEffects, Gamma2AndGamma3OfSums) {
  std::mt19937 rng(4);
  for (int t = 0; t < 12; ++t) {
    Group b = random_small_group(rng), c = random_small_group(rng);
    Group bc = direct_sum(b, c);
    Group g2b = apply(FunctorId::Gamma2, b).group, g2c = apply(FunctorId::Gamma2, c).group;
    EXPECT_TRUE(apply(FunctorId::Gamma2, bc).group.isomorphic(
        direct_sum({g2b, tensor(b, c), g2c})));
    EXPECT_TRUE(apply(FunctorId::Gamma3, bc).group.isomorphic(
        direct_sum({apply(FunctorId::Gamma3, b).group, tensor(g2b, c), tensor(b, g2c),
                    apply(FunctorId::Gamma3, c).group})))
        << b.describe() << " , " << c.describe();
  }
}

TEST(FreeGroups, Gamma2IntoTensorSquare) {
  for (std::size_t r = 1; r <= 4; ++r) {
    Group b = Group::free(r);
    GroupHom j = gamma2_to_tensor2(b);
    EXPECT_TRUE(j.is_injective());
    EXPECT_TRUE(cokernel(j).isomorphic(apply(FunctorId::Lambda2, b).group));
    EXPECT_TRUE(exact_at(j, tensor2_to_lambda2(b)));
  }
}

TEST(FreeLevel, SplittingMatrices) {
  for (std::size_t n = 1; n <= 4; ++n) {
    EXPECT_EQ(tensor2_retraction_matrix(n) * gamma2_to_tensor2_matrix(n),
              IntMatrix::identity(monomial_count(FunctorId::Gamma2, n)));
    EXPECT_EQ(tensor2_to_lambda2_matrix(n) * lambda2_section_matrix(n),
              IntMatrix::identity(monomial_count(FunctorId::Lambda2, n)));
    EXPECT_TRUE((tensor2_to_lambda2_matrix(n) * gamma2_to_tensor2_matrix(n)).is_zero());
  }
}
