#include <gtest/gtest.h>

#include <random>

#include "gammalab/braided.hpp"
#include "gammalab/classify.hpp"
#include "gammalab/errors.hpp"
#include "gammalab/polyfunctors.hpp"

using namespace gammalab;

namespace {

Group zmod(long n) { return Group::cyclic(Int(n)); }
const Group klein = Group(2, IntMatrix{{2, 0}, {0, 2}});

IntVector val(long v) { return IntVector{Int(v)}; }

// Cyclic B = Z/nb, A = Z/na with integer tables
struct PlainPair {
  long nb, na;
  std::vector<long> h, c;
  long H(long x, long y, long z) const { return h[(x * nb + y) * nb + z]; }
  long C(long x, long y) const { return c[x * nb + y]; }
};

bool plain_valid(const PlainPair& p) {
  const long n = p.nb, m = p.na;
  auto md = [&](long v) { return ((v % m) + m) % m; };
  auto ad = [&](long x, long y) { return (x + y) % n; };
  for (long x = 0; x < n; ++x)
    for (long y = 0; y < n; ++y)
      for (long z = 0; z < n; ++z) {
        for (long w = 0; w < n; ++w)
          if (md(p.H(y, z, w) - p.H(ad(x, y), z, w) + p.H(x, ad(y, z), w) - p.H(x, y, ad(z, w)) +
                 p.H(x, y, z)))
            return false;
        if (md(p.H(y, z, x) + p.C(x, ad(y, z)) + p.H(x, y, z) - p.C(x, z) - p.H(y, x, z) - p.C(x, y)))
          return false;
        if (md(-p.H(z, x, y) + p.C(ad(x, y), z) - p.H(x, y, z) - p.C(x, z) + p.H(x, z, y) - p.C(y, z)))
          return false;
      }
  return true;
}

// Counts valid normalized pairs over cyclic groups by running through every table.
long brute_valid_count(long nb, long na) {
  const long u = nb - 1;
  const long nh = u * u * u, nc = u * u;
  std::vector<long> digits(static_cast<std::size_t>(nh + nc), 0);
  PlainPair p{nb, na, std::vector<long>(nb * nb * nb, 0), std::vector<long>(nb * nb, 0)};
  long count = 0;
  for (;;) {
    for (long k = 0; k < nh; ++k) {
      const long x = k / (u * u) + 1, y = (k / u) % u + 1, z = k % u + 1;
      p.h[(x * nb + y) * nb + z] = digits[k];
    }
    for (long k = 0; k < nc; ++k) p.c[(k / u + 1) * nb + k % u + 1] = digits[nh + k];
    if (plain_valid(p)) ++count;
    std::size_t pos = 0;
    while (pos < digits.size() && ++digits[pos] == na) digits[pos++] = 0;
    if (pos == digits.size()) break;
  }
  return count;
}

bool valid_by_plain_oracle(const AbelianCocyclePair& q, long nb, long na) {
  PlainPair p{nb, na, {}, {}};
  for (const auto& v : q.h) p.h.push_back(v[0].get_si());
  for (const auto& v : q.c) p.c.push_back(v[0].get_si());
  return plain_valid(p);
}

Int hom_gamma2_order(const Group& b, const Group& a) {
  return hom_group(apply(FunctorId::Gamma2, b).group, a).group.order();
}

}  // namespace

TEST(Quadratic, Checks) {
  EXPECT_TRUE(is_quadratic(QuadraticMap::zero(zmod(3), zmod(3))).pass());
  QuadraticMap q{zmod(2), zmod(4), {val(0), val(1)}};
  EXPECT_TRUE(is_quadratic(q).pass());
  auto phi = polarization(q);
  EXPECT_EQ(phi.at(1, 1), val(2));
  QuadraticMap lin{zmod(4), zmod(4), {val(0), val(1), val(2), val(3)}};
  auto rep = is_quadratic(lin);
  EXPECT_FALSE(rep.pass());
  ASSERT_TRUE(rep.counts.count("symmetry"));
  EXPECT_EQ(rep.violations.front().axiom, "symmetry");
  EXPECT_EQ(rep.violations.front().args, (std::vector<std::size_t>{1}));
  EXPECT_THROW(polarization(lin), NotQuadratic);
  for (std::size_t x = 0; x < 2; ++x)
    for (std::size_t y = 0; y < 2; ++y) EXPECT_EQ(phi.at(x, y), phi.at(y, x));
}

TEST(Quadratic, EnumerationCounts) {
  EXPECT_EQ(enumerate_quadratic(zmod(2), zmod(2)).size(), 2u);
  EXPECT_EQ(enumerate_quadratic(zmod(2), zmod(4)).size(), 4u);
  EXPECT_EQ(enumerate_quadratic(zmod(3), zmod(2)).size(), 1u);
  const std::vector<std::pair<Group, Group>> battery = {
      {zmod(2), zmod(2)}, {zmod(2), zmod(4)}, {zmod(3), zmod(3)}, {klein, zmod(2)},
      {zmod(4), zmod(8)}, {klein, zmod(4)},   {zmod(6), zmod(6)}, {zmod(3), klein}};
  for (const auto& [b, a] : battery) {
    auto qs = enumerate_quadratic(b, a);
    EXPECT_EQ(Int(static_cast<unsigned long>(qs.size())), hom_gamma2_order(b, a)) << b.describe() << " " << a.describe();
    EXPECT_EQ(Int(static_cast<unsigned long>(qs.size())), cohomology_K2(b, a, 4).total.order());
    for (const auto& q : qs) EXPECT_TRUE(is_quadratic(q).pass());
  }
}

TEST(Quadratic, HomRoundTrip) {
  for (const auto& [b, a] : std::vector<std::pair<Group, Group>>{{zmod(2), zmod(4)}, {klein, zmod(4)}, {zmod(3), zmod(9)}}) {
    std::vector<GroupHom> seen;
    for (const auto& q : enumerate_quadratic(b, a)) {
      GroupHom f = hom_from_quadratic(q);
      EXPECT_EQ(quadratic_from_hom(b, f).q, q.q);
      for (const auto& g : seen) EXPECT_FALSE(f.equals(g));
      seen.push_back(f);
    }
  }
  QuadraticMap q{zmod(2), zmod(4), {val(0), val(1)}};
  EXPECT_EQ(hom_from_quadratic(q).matrix(), (IntMatrix{{1}}));
  EXPECT_TRUE(hom_from_quadratic(QuadraticMap::zero(zmod(2), zmod(4))).is_zero());
}

TEST(Cocycle, Examples) {
  EXPECT_TRUE(verify_cocycle(AbelianCocyclePair::zero(zmod(3), zmod(3))).pass());
  // Bilinear braiding with trivial associator.
  auto p = AbelianCocyclePair::zero(zmod(3), zmod(3));
  for (std::size_t x = 0; x < 3; ++x)
    for (std::size_t y = 0; y < 3; ++y) p.C(x, y) = val(static_cast<long>((2 * x * y) % 3));
  EXPECT_TRUE(verify_cocycle(p).pass());
  EXPECT_EQ(tau_of(p).q, (std::vector<IntVector>{val(0), val(2), val(2)}));
  auto bad = AbelianCocyclePair::zero(zmod(2), zmod(4));
  bad.C(1, 1) = val(1);
  auto rep = verify_cocycle(bad);
  EXPECT_FALSE(rep.pass());
  EXPECT_TRUE(rep.counts.count("hexagon1") || rep.counts.count("hexagon2"));
  EXPECT_THROW(tau_of(bad), InvalidCocycle);
  auto good = bad;
  good.H(1, 1, 1) = val(2);
  EXPECT_TRUE(verify_cocycle(good).pass());
  EXPECT_FALSE(is_strictly_symmetric(good));
  EXPECT_TRUE(is_strictly_symmetric(AbelianCocyclePair::zero(zmod(2), zmod(4))));
  EXPECT_THROW(is_strictly_symmetric(bad), InvalidCocycle);
}

TEST(Cocycle, PolarizationOfTau) {
  for (const auto& [b, a] : std::vector<std::pair<Group, Group>>{{zmod(2), zmod(4)}, {zmod(3), zmod(3)}, {zmod(2), zmod(2)}}) {
    auto cl = classify_cocycles(b, a);
    for (const auto& p : cl.valid) {
      auto q = tau_of(p);
      ASSERT_TRUE(is_quadratic(q).pass());
      auto phi = polarization(q);
      for (std::size_t x = 0; x < p.n; ++x)
        for (std::size_t y = 0; y < p.n; ++y) {
          IntVector s = p.C(x, y);
          for (std::size_t i = 0; i < s.size(); ++i) s[i] += p.C(y, x)[i];
          EXPECT_EQ(phi.at(x, y), a.reduce(s));
        }
      for (std::size_t x = 0; x < p.n; ++x)
        for (std::size_t y = 0; y < p.n; ++y)
          for (std::size_t z = 0; z < p.n; ++z) EXPECT_TRUE(a.is_zero(yb_defect(p, x, y, z)));
    }
  }
}

TEST(Cocycle, CoboundaryActionKeepsValidityAndTau) {
  std::mt19937 rng(5);
  auto cl = classify_cocycles(zmod(3), zmod(3));
  std::uniform_int_distribution<long> v(0, 2);
  for (const auto& p : cl.valid) {
    std::vector<IntVector> b(9, val(0));
    for (std::size_t x = 1; x < 3; ++x)
      for (std::size_t y = 1; y < 3; ++y) b[x * 3 + y] = val(v(rng));
    auto q = coboundary_action(p, b);
    EXPECT_TRUE(verify_cocycle(q).pass());
    EXPECT_EQ(tau_of(q).q, tau_of(p).q);
  }
}

TEST(Classify, SmallCasesMatchHomGamma2) {
  struct Case { long nb, na; long classes; };
  for (const auto& k : {Case{2, 2, 2}, Case{2, 4, 4}, Case{3, 3, 3}}) {
    auto cl = classify_cocycles(zmod(k.nb), zmod(k.na));
    EXPECT_TRUE(cl.exhaustive);
    EXPECT_EQ(cl.classes, Int(k.classes));
    EXPECT_EQ(cl.classes, hom_gamma2_order(zmod(k.nb), zmod(k.na)));
    EXPECT_TRUE(cl.tau_constant_on_classes);
    EXPECT_TRUE(cl.tau_bijective);
    EXPECT_EQ(cl.valid_pairs, Int(brute_valid_count(k.nb, k.na)));
    EXPECT_EQ(cl.valid_pairs, cl.classes * cl.coboundaries);
    for (const auto& c : cl.class_list) EXPECT_EQ(Int(static_cast<unsigned long>(c.size)), cl.coboundaries);
  }
}

TEST(Classify, TauOneClassNeedsAssociator) {
  auto cl = classify_cocycles(zmod(2), zmod(4));
  bool found = false;
  for (const auto& c : cl.class_list)
    if (c.tau.q[1] == val(1)) {
      found = true;
      EXPECT_FALSE(c.has_zero_associator_member);
    }
  EXPECT_TRUE(found);
  for (const auto& c : cl.class_list)
    if (c.tau.q[1] == val(0)) EXPECT_TRUE(c.has_zero_associator_member);
}

TEST(Classify, LargerCasesByCounting) {
  for (const auto& [b, a] : std::vector<std::pair<Group, Group>>{{zmod(4), zmod(2)}, {klein, zmod(2)}, {zmod(5), zmod(5)}}) {
    auto cl = classify_cocycles(b, a);
    EXPECT_FALSE(cl.exhaustive);
    EXPECT_EQ(cl.classes, hom_gamma2_order(b, a)) << b.describe() << " " << a.describe();
    EXPECT_TRUE(cl.tau_bijective);
  }
}

TEST(Mutation, SingleEntryBumpsAreCaught) {
  // Every bump of a valid pair is either rejected or valid by the plain oracle.
  for (const auto& [nb, na] : std::vector<std::pair<long, long>>{{2, 4}, {3, 3}}) {
    auto cl = classify_cocycles(zmod(nb), zmod(na));
    std::size_t rejected = 0, valid_mutants = 0;
    for (const auto& p : cl.valid) {
      for (std::size_t k = 0; k < p.h.size() + p.c.size(); ++k) {
        auto m = p;
        IntVector& e = k < p.h.size() ? m.h[k] : m.c[k - p.h.size()];
        e[0] = (e[0] + 1) % na;
        bool accepted = verify_cocycle(m).pass();
        if (accepted)
          for (std::size_t x = 0; x < m.n && accepted; ++x)
            for (std::size_t y = 0; y < m.n && accepted; ++y)
              for (std::size_t z = 0; z < m.n && accepted; ++z) accepted = yb_defect(m, x, y, z)[0] == 0;
        EXPECT_EQ(accepted, valid_by_plain_oracle(m, nb, na));
        (accepted ? valid_mutants : rejected) += 1;
      }
    }
    EXPECT_GT(rejected, 0u);
  }
}
