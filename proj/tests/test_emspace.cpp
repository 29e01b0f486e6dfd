#include <gtest/gtest.h>

#include "gammalab/emspace.hpp"
#include "gammalab/errors.hpp"

using namespace gammalab;

namespace {

Group zmod(long n) { return Group::cyclic(Int(n)); }
const Group klein = Group(2, IntMatrix{{2, 0}, {0, 2}});

// Γ_k of a free group of rank r has rank C(r + k - 1, k).
std::size_t divided_power_rank(std::size_t r, std::size_t k) {
  std::size_t c = 1;
  for (std::size_t i = 0; i < k; ++i) c = c * (r + i) / (i + 1);
  return c;
}

}  // namespace

TEST(HomologyK2, LowDegrees) {
  for (const auto& b : {zmod(2), zmod(3), zmod(4), zmod(6), Group::free(2), klein}) {
    EXPECT_TRUE(homology_K2(b, 2).assembled.isomorphic(b)) << b.describe();
    EXPECT_TRUE(homology_K2(b, 3).assembled.is_trivial()) << b.describe();
    EXPECT_TRUE(homology_K2(b, 1).assembled.is_trivial());
    EXPECT_TRUE(homology_K2(b, 0).assembled.isomorphic(Group::free(1)));
  }
  EXPECT_TRUE(homology_K2(zmod(2), 4).assembled.isomorphic(zmod(4)));
  EXPECT_TRUE(homology_K2(zmod(2), 5).assembled.isomorphic(zmod(2)));
  EXPECT_TRUE(homology_K2(zmod(3), 5).assembled.is_trivial());
}

TEST(HomologyK2, DegreeSixPieces) {
  auto h = homology_K2(zmod(3), 6);
  ASSERT_EQ(h.pieces.size(), 3u);
  EXPECT_EQ(h.pieces[0].q, 1);
  EXPECT_EQ(h.pieces[1].p, 2);
  EXPECT_EQ(h.pieces[1].q, 2);
  EXPECT_EQ(h.pieces[2].p, 0);
  EXPECT_EQ(h.pieces[2].q, 3);
  EXPECT_TRUE(h.pieces[2].group.isomorphic(zmod(9)));
  EXPECT_TRUE(h.assembled.isomorphic(zmod(9)));
  EXPECT_THROW(homology_K2(zmod(2), 7), InputError);
  EXPECT_NO_THROW(filtration_pieces(zmod(2), 7));
}

TEST(HomologyK2, FreeGroupsGiveDividedPowers) {
  for (std::size_t r = 1; r <= 3; ++r) {
    Group b = Group::free(r);
    for (int n = 0; n <= 6; ++n) {
      Group h = homology_K2(b, n).assembled;
      if (n % 2)
        EXPECT_TRUE(h.is_trivial());
      else
        EXPECT_TRUE(h.isomorphic(Group::free(divided_power_rank(r, static_cast<std::size_t>(n / 2)))))
            << "rank " << r << " degree " << n;
    }
  }
}

TEST(HomologyK1, ExteriorPowers) {
  EXPECT_TRUE(homology_K1_free(Group::free(2), 2).isomorphic(Group::free(1)));
  EXPECT_TRUE(homology_K1_free(Group::free(3), 2).isomorphic(Group::free(3)));
  EXPECT_TRUE(homology_K1_free(Group::free(1), 2).is_trivial());
  EXPECT_TRUE(homology_K1_free(Group::free(4), 0).isomorphic(Group::free(1)));
  EXPECT_TRUE(homology_K1_free(Group::free(6), 3).isomorphic(Group::free(20)));
  EXPECT_THROW(homology_K1_free(zmod(2), 1), NotFree);
  // A presentation of Z^2 with redundant generators is still free.
  EXPECT_TRUE(homology_K1_free(Group(3, IntMatrix{{1}, {0}, {0}}), 2).isomorphic(Group::free(1)));
}

TEST(BarOracle, IsAComplex) {
  for (const auto& b : {zmod(2), zmod(3), zmod(4), klein}) {
    auto c = double_bar_complex(b, 7);
    EXPECT_TRUE(c.is_complex()) << b.describe();
  }
}

TEST(BarOracle, KnownValues) {
  EXPECT_TRUE(bar_homology_oracle(zmod(2), 2).isomorphic(zmod(2)));
  EXPECT_TRUE(bar_homology_oracle(zmod(2), 3).is_trivial());
  EXPECT_TRUE(bar_homology_oracle(zmod(2), 4).isomorphic(zmod(4)));
  EXPECT_TRUE(bar_homology_oracle(zmod(3), 4).isomorphic(zmod(3)));
  EXPECT_TRUE(bar_homology_oracle(zmod(1), 5).is_trivial());
  EXPECT_THROW(bar_homology_oracle(zmod(4), 2), SizeGuard);
  EXPECT_THROW(bar_homology_oracle(zmod(2), 6), SizeGuard);
}

TEST(BarOracle, AgreesWithSpectralSequence) {
  for (const auto& b : {zmod(2), zmod(3)})
    for (int n = 0; n <= 5; ++n) {
      Group oracle = bar_homology_oracle(b, n);
      Group pieces = homology_K2(b, n).assembled;
      EXPECT_TRUE(oracle.isomorphic(pieces)) << b.describe() << " n=" << n;
    }
}

TEST(BarOracle, AgreesBeyondTheGuard) {
  // Degrees 6 and 7, and groups of order 4, through the unguarded complex.
  for (const auto& b : {zmod(2), zmod(3), zmod(4), klein}) {
    const int top = (b.order() <= 3) ? 7 : 5;
    auto c = double_bar_complex(b, top + 1);
    for (int n = 1; n <= top; ++n)
      EXPECT_TRUE(c.homology(static_cast<std::size_t>(n)).group.isomorphic(
          filtration_pieces(b, n).assembled))
          << b.describe() << " n=" << n;
  }
}

TEST(SimplicialModel, MatchesBarInLowDegrees) {
  auto z2 = simplicial_k2_complex(zmod(2), 5);
  EXPECT_TRUE(z2.is_complex());
  EXPECT_EQ(z2.ranks, (std::vector<std::size_t>{1, 0, 1, 4, 41, 768}));
  for (std::size_t n = 1; n <= 4; ++n)
    EXPECT_TRUE(z2.homology(n).group.isomorphic(bar_homology_oracle(zmod(2), static_cast<int>(n))))
        << n;
  auto z3 = simplicial_k2_complex(zmod(3), 4);
  EXPECT_TRUE(z3.is_complex());
  for (std::size_t n = 1; n <= 3; ++n)
    EXPECT_TRUE(z3.homology(n).group.isomorphic(homology_K2(zmod(3), static_cast<int>(n)).assembled));
}
