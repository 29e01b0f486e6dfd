#include <gtest/gtest.h>

#include <random>

#include "gammalab/derived.hpp"
#include "gammalab/errors.hpp"
#include "gammalab/torsors.hpp"

using namespace gammalab;

namespace {

Group zmod(long n) { return Group::cyclic(Int(n)); }
IntVector val(long v) { return IntVector{Int(v)}; }

std::vector<IntVector> random_table(const Group& a, std::size_t n, std::size_t arity, std::mt19937_64& rng) {
  FiniteGroup fa(a);
  std::size_t m = 1;
  for (std::size_t i = 0; i < arity; ++i) m *= n;
  std::vector<IntVector> t(m, a.zero());
  for (std::size_t k = 0; k < m; ++k) {
    bool has_zero = false;
    for (std::size_t j = 0, r = k; j < arity; ++j, r /= n) has_zero |= (r % n == 0);
    if (!has_zero) t[k] = fa.element(rng() % fa.size());
  }
  return t;
}

}  // namespace

TEST(Biextension, ZeroAndBumped) {
  auto d = BiextensionData::zero(zmod(3), zmod(3));
  EXPECT_TRUE(verify_biextension(d).pass());
  d.F(1, 2, 1) = val(1);
  auto rep = verify_biextension(d);
  ASSERT_FALSE(rep.pass());
  bool located = false;
  for (const auto& v : rep.violations)
    for (auto i : v.args) located |= (i == 1 || i == 2);
  EXPECT_TRUE(located);
  EXPECT_GT(rep.counts.count("first_commutativity"), 0u);
}

TEST(Biextension, CarryTimesLinear) {
  // f(x,x';y) = carry(x,x')·y over B = A = Z/4, g = 0.
  auto d = BiextensionData::zero(zmod(4), zmod(4));
  for (long x = 0; x < 4; ++x)
    for (long x2 = 0; x2 < 4; ++x2)
      for (long y = 0; y < 4; ++y) d.F(x, x2, y) = val((x + x2 >= 4) ? y : 0);
  EXPECT_TRUE(verify_biextension(d).pass());
  d.F(1, 3, 1) = val(2);
  EXPECT_FALSE(verify_biextension(d).pass());
}

TEST(Biextension, FromValidCocycles) {
  for (const auto& [b, a] : std::vector<std::pair<Group, Group>>{{zmod(2), zmod(2)}, {zmod(2), zmod(4)}, {zmod(3), zmod(3)}}) {
    auto cl = classify_cocycles(b, a);
    ASSERT_TRUE(cl.exhaustive);
    for (const auto& p : cl.valid) {
      auto e = biext_from_cocycle(p);
      EXPECT_TRUE(e.standard);
      EXPECT_TRUE(e.trivialized);
      EXPECT_TRUE(verify_biextension(e.biext).pass());
      auto alt = alternating_quadratic(p);
      auto tau = tau_of(p);
      for (std::size_t x = 0; x < p.n; ++x) EXPECT_TRUE(a.is_zero(a.add(alt.q[x], tau.q[x])));
    }
  }
  auto cl = classify_cocycles(zmod(2), zmod(4));
  for (const auto& c : cl.class_list)
    if (c.tau.q[1] == val(1)) EXPECT_EQ(alternating_quadratic(c.representative).q[1], val(3));
}

TEST(Biextension, RejectsInvalidPairs) {
  auto p = AbelianCocyclePair::zero(zmod(2), zmod(2));
  p.C(1, 1) = val(1);
  EXPECT_NO_THROW(biext_from_cocycle(p));
  p.H(1, 1, 1) = val(1);
  EXPECT_THROW(biext_from_cocycle(p), InvalidCocycle);
}

TEST(Commutator, TrilinearAssociator) {
  // h(x,y,z) = x1 y2 z3 on (Z/2)^3; the commutator is the determinant mod 2.
  const Group b(3, IntMatrix{{2, 0, 0}, {0, 2, 0}, {0, 0, 2}});
  const Group a = zmod(2);
  FiniteGroup fb(b);
  const std::size_t n = fb.size();
  auto bit = [&](std::size_t x, int i) { return fb.element(x)[i].get_si() & 1; };
  std::vector<IntVector> h(n * n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) h[(x * n + y) * n + z] = val(bit(x, 0) * bit(y, 1) * bit(z, 2));
  auto d = weak_biext_from_associator(b, a, h);
  EXPECT_TRUE(verify_biextension(d).pass());
  d.weak = false;
  EXPECT_FALSE(verify_biextension(d).pass());

  auto k = commutator_map(d);
  EXPECT_TRUE(k.trilinear);
  EXPECT_TRUE(k.alternating);
  EXPECT_FALSE(k.vanishes);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        long det = 0;
        for (int i = 0; i < 3; ++i)
          det += bit(x, i) * bit(y, (i + 1) % 3) * bit(z, (i + 2) % 3) + bit(x, i) * bit(y, (i + 2) % 3) * bit(z, (i + 1) % 3);
        EXPECT_EQ(k.first[(x * n + y) * n + z], val(det % 2));
        EXPECT_EQ(k.second[(x * n + y) * n + z], val(det % 2));
      }

  std::mt19937_64 rng(7);
  auto t = random_table(a, n, 2, rng);
  auto moved = retrivialize(d, t);
  EXPECT_TRUE(verify_biextension([&] { auto w = moved; w.weak = true; return w; }()).pass());
  auto k2 = commutator_map(moved);
  EXPECT_EQ(k2.first, k.first);
  EXPECT_EQ(k2.second, k.second);
}

TEST(Commutator, VanishesForCyclicGroups) {
  // Λ³ of a cyclic group is trivial.
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 5; ++trial) {
    auto cl = classify_cocycles(zmod(3), zmod(3));
    const auto& p = cl.valid[rng() % cl.valid.size()];
    EXPECT_TRUE(commutator_map(weak_biext_from_associator(p.b, p.a, p.h)).vanishes);
  }
}

TEST(Sigma, GaugeKeepsThetaSolutions) {
  std::mt19937_64 rng(11);
  const Group b = zmod(4), a = zmod(2);
  auto d = SigmaData::zero(b, a);
  EXPECT_TRUE(verify_sigma(d).pass());
  for (int trial = 0; trial < 10; ++trial) {
    auto t = random_table(a, 4, 1, rng);
    auto moved = retrivialize(d, t);
    EXPECT_TRUE(verify_sigma(moved, SigmaConvention::Theta).pass());
  }
  // The literal convention is not preserved by every gauge.
  auto d3 = SigmaData::zero(zmod(3), zmod(3));
  bool broken = false;
  for (int trial = 0; trial < 20 && !broken; ++trial)
    broken = !verify_sigma(retrivialize(d3, random_table(zmod(3), 3, 1, rng)), SigmaConvention::Literal).pass();
  EXPECT_TRUE(broken);
}

TEST(Sigma, ClassCountsMatchHyperExt) {
  struct Case {
    Group b, a;
    long classes;
  };
  for (const auto& c : std::vector<Case>{{zmod(2), zmod(2), 4}, {zmod(2), zmod(4), 8}, {zmod(3), zmod(3), 3},
                                         {zmod(4), zmod(4), 8},
                                         {zmod(2), zmod(1), 1}, {zmod(3), zmod(2), 1}}) {
    auto s = classify_sigma(c.b, c.a, SigmaConvention::Theta);
    EXPECT_TRUE(s.gauge_invariant);
    EXPECT_EQ(s.classes, Int(c.classes)) << c.b.describe() << " " << c.a.describe();
    EXPECT_TRUE(s.matches());
  }
}

TEST(Sigma, LiteralConvention) {
  auto s = classify_sigma(zmod(2), zmod(2), SigmaConvention::Literal);
  EXPECT_EQ(s.convention, SigmaConvention::Literal);
  EXPECT_TRUE(s.gauge_invariant);
  EXPECT_TRUE(s.matches());
  // Over Z/3 the literal equations admit only the zero structure.
  auto s3 = classify_sigma(zmod(3), zmod(3), SigmaConvention::Literal);
  EXPECT_FALSE(s3.gauge_invariant);
  EXPECT_EQ(s3.solutions, 1);
  EXPECT_FALSE(s3.matches());
  EXPECT_EQ(parse_sigma_convention(sigma_convention_name(SigmaConvention::Literal)), SigmaConvention::Literal);
  EXPECT_THROW(parse_sigma_convention("other"), InputError);
  EXPECT_THROW(classify_sigma(zmod(5), zmod(2)), SizeGuard);
}
