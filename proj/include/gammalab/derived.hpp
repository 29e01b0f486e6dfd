#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gammalab/polyfunctors.hpp"

namespace gammalab {

/// Bounded chain complex of free groups C_0 ← C_1 ← ... ← C_top.
/// differential(n) : C_n → C_{n-1} for 1 <= n <= top.
struct ChainOfFree {
  std::vector<std::size_t> ranks;
  std::vector<IntMatrix> d;  // d[0] unused; d[n] has ranks[n-1] rows, ranks[n] cols

  std::size_t top() const { return ranks.empty() ? 0 : ranks.size() - 1; }
  const IntMatrix& differential(std::size_t n) const { return d[n]; }
  bool is_complex() const;
  /// Cycles and boundaries of degree n as column lattices in Z^{ranks[n]}.
  /// Degree n < top is required for the boundaries to be complete.
  IntMatrix cycles(std::size_t n) const;
  IntMatrix boundaries(std::size_t n) const;
  Subquotient homology(std::size_t n) const;
};

/// Levels 0..n_max of a simplicial free abelian group.
struct SimplicialLevels {
  std::vector<std::size_t> ranks;
  std::vector<std::vector<IntMatrix>> faces;         // faces[n][i] : K_n → K_{n-1}
  std::vector<std::vector<IntMatrix>> degeneracies;  // degeneracies[n][i] : K_n → K_{n+1}

  std::size_t top() const { return ranks.size() - 1; }
  /// First failing simplicial identity, if any.
  std::optional<std::string> identity_violation() const;
  /// Applies a functor levelwise; throws SizeGuard above the monomial bound.
  SimplicialLevels apply(FunctorId f) const;
  /// ∩_{i>=1} ker d_i with differential d_0, in explicit free bases.
  ChainOfFree moore_complex() const;
  /// All of K_n with differential Σ (-1)^i d_i.
  ChainOfFree unnormalized_complex() const;
};

/// Per-level monomial bound for levelwise functor application.
inline constexpr std::uint64_t kLevelMonomialGuard = 20000;

/// Nerve of the action of Z^r on Z^g through the relations: level n is
/// Z^g ⊕ (Z^r)^n, so its homotopy is B in degree 0 and zero above.
SimplicialLevels resolve(const Group& b, std::size_t n_max);

/// L_p F(B) as homology of the Moore complex of F(resolve(B)).
Group l_derived(FunctorId f, const Group& b, std::size_t p);
/// L_p of the identity functor (the resolution itself): B for p = 0, else 0.
Group l_derived_identity(const Group& b, std::size_t p);
/// H^i of Hom(N F(resolve(B)), A).
Group hyper_ext(FunctorId f, const Group& b, const Group& a, std::size_t i);
/// Moore complex used by l_derived/hyper_ext, through degree top.
ChainOfFree derived_complex(FunctorId f, const Group& b, std::size_t top);
/// H^i of Hom(C, A) for a chain complex of free groups; needs i < C.top().
Group cochain_cohomology(const ChainOfFree& c, const Group& a, std::size_t i);

struct LesReport {
  std::vector<std::pair<std::string, Group>> terms;
  std::vector<ExactnessNode> nodes;
  /// L_1 ⊗² B compared with Tor₁(B, B), and L_2 ⊗² B with 0.
  bool tensor_matches_tor = false;
  /// Alternating product of orders over the finite sequence equals 1.
  std::optional<bool> order_balance;
  bool exact() const;
};

/// Long exact homology sequence of Γ₂ → ⊗² → Λ² applied to resolve(B),
/// from degree 2 down to degree 0, with explicit connecting maps.
LesReport gamlam_les(const Group& b);

}  // namespace gammalab
