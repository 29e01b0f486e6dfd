#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gammalab/torsors.hpp"

namespace gammalab {

/// Sign conventions shared by the Σ and Γ₃ checkers. The shipped defaults
/// live in conventions/default.json.
struct Convention {
  SigmaConvention sigma = SigmaConvention::Theta;
  int psi_sign = 1;    // orientation of ψ relative to the cyclic difference of ρ
  int gamma_sign = 1;  // orientation of γ relative to E³ ∧ s*E³
};

/// Trivialized Γ₃-torsor pair: E over B × B and L over B, all fibers trivial.
struct Gamma3Pair {
  Group b, a;
  std::size_t n = 0;
  std::vector<IntVector> theta;   // cube of E_(-,y): θ_y(x1,x2,x3) at ((y*n + x1)*n + x2)*n + x3
  std::vector<IntVector> lambda;  // symmetry of E_(-,y): λ_y(x) at y*n + x
  std::vector<IntVector> ext2;    // G(x;y,y') at (x*n + y)*n + y'
  std::vector<IntVector> alpha;   // α(x,y) : Λ(L)_{x,y} → E_{x,y} E_{y,x}
  std::vector<IntVector> beta;    // β(x) : L³_x → Δ*E_x

  static Gamma3Pair zero(const Group& b, const Group& a);

  IntVector& Theta(std::size_t y, std::size_t x1, std::size_t x2, std::size_t x3) {
    return theta[((y * n + x1) * n + x2) * n + x3];
  }
  const IntVector& Theta(std::size_t y, std::size_t x1, std::size_t x2, std::size_t x3) const {
    return theta[((y * n + x1) * n + x2) * n + x3];
  }
  IntVector& Lambda(std::size_t y, std::size_t x) { return lambda[y * n + x]; }
  const IntVector& Lambda(std::size_t y, std::size_t x) const { return lambda[y * n + x]; }
  IntVector& G(std::size_t x, std::size_t y, std::size_t y2) { return ext2[(x * n + y) * n + y2]; }
  const IntVector& G(std::size_t x, std::size_t y, std::size_t y2) const { return ext2[(x * n + y) * n + y2]; }
  IntVector& Alpha(std::size_t x, std::size_t y) { return alpha[x * n + y]; }
  const IntVector& Alpha(std::size_t x, std::size_t y) const { return alpha[x * n + y]; }

  /// Σ-structure of E restricted to B × {y}.
  SigmaData sigma_member(std::size_t y) const;
  /// Every table, in the order theta, lambda, ext2, alpha, beta.
  std::vector<IntVector*> entries();
  bool operator==(const Gamma3Pair& o) const;
};

struct DiagramViolation {
  std::vector<std::size_t> args;
  IntVector lhs, rhs;
};

struct DiagramReport {
  std::string diagram;  // compat413, phiass, phicom or alphabeta1
  std::size_t failures = 0;
  std::vector<DiagramViolation> violations;  // first kKept, in argument order
  bool pass() const { return failures == 0; }
  static constexpr std::size_t kKept = 16;
};

/// Compatibility of the Σ-structures with the second-variable law:
/// θ_{y1} + θ_{y2} + Θ G(·;y1,y2) = θ_{y1+y2} and
/// λ_{y1}(x) + λ_{y2}(x) + G(-x;y1,y2) - G(x;y1,y2) = λ_{y1+y2}(x).
DiagramReport verify_compat(const Gamma3Pair& p);

/// ψ_{x,y,z} = ρ(x,y,z) - ρ(y,z,x) where
/// ρ(x,y,z) = G(z;x,y) - α(x+y,z) + α(x,z) + α(y,z) compares the two
/// identifications of E_{x+y,z} E_{x,z}⁻¹ E_{y,z}⁻¹ with the second difference of L.
IntVector eval_psi(const Gamma3Pair& p, std::size_t x, std::size_t y, std::size_t z, const Convention& c = {});
/// φ_{x,y,z} = -G(z;x,y) + ψ_{x,y,z} + G(x;y,z): ψ with the first-variable
/// factors moved across by the linearity of E in its second variable.
IntVector eval_phi(const Gamma3Pair& p, std::size_t x, std::size_t y, std::size_t z, const Convention& c = {});
/// γ(x,y) = -G(x+y;x,y) + μ(x,y) + μ(y,x) with μ(x,y) = κ_x(y) - ψ_{y,y,x}
/// and κ_x(y) = θ_x(y,-y,y) + λ_x(-y) (the Σ-isomorphism E_{2y,x} ≅ E⁴_{y,x}).
IntVector eval_gamma(const Gamma3Pair& p, std::size_t x, std::size_t y, const Convention& c = {});

/// φ + α(x+y,z) + α(x,y) = α(x,y+z) + α(y,z).
DiagramReport check_phiass(const Gamma3Pair& p, const Convention& c = {});
/// α(x,y) = α(y,x).
DiagramReport check_phicom(const Gamma3Pair& p);
/// γ(x,y) - [β(x+y) - β(x) - β(y)] = 3α(x,y).
DiagramReport check_alphabeta(const Gamma3Pair& p, const Convention& c = {});

struct PairReport {
  AxiomReport invariants;  // normalization, Σ members, ext2 symmetric cocycles
  std::vector<DiagramReport> diagrams;
  bool pass() const;
};
PairReport verify_pair(const Gamma3Pair& p, const Convention& c = {});

/// Re-trivialization of E by t_E : B² → A and of L by t_L : B → A.
Gamma3Pair gauge(const Gamma3Pair& p, const std::vector<IntVector>& t_e, const std::vector<IntVector>& t_l);

struct Prop42Result {
  std::vector<IntVector> extension;  // ℓ(x,y): symmetric 2-cocycle of L
  std::vector<IntVector> splitting;  // r(x) with r(x+y) - r(x) - r(y) = ℓ(3x,3y)
  bool associative = false;
  bool commutative = false;
  bool splitting_verified = false;
  bool ok() const { return associative && commutative && splitting_verified; }
};

/// Trivializes E by the section, reads off the group law of L from α and the
/// splitting of its pullback along multiplication by 3 from β. Throws
/// AxiomFailure if the pair is invalid and IncompatibleSection (naming a
/// witness) if the section does not trivialize the structures of E.
Prop42Result prop42(const Gamma3Pair& p, const std::vector<IntVector>& section, const Convention& c = {});

/// The zero pair moved by a seeded random gauge; always valid.
Gamma3Pair random_pair(const Group& b, const Group& a, std::uint64_t seed);

struct Gamma3Count {
  Int solutions;      // normalized tables passing verify_pair
  Int gauge_image;    // size of the gauge group's image
  Int classes;        // solutions / gauge_image
  bool gauge_invariant = false;
  Int reference;      // |Ext¹(LΓ₃B, A)|, reported alongside
};

/// Counts pairs up to gauge through the Smith form of the linear constraint
/// system; |B| <= 4 and |A| <= 9 (scaled by GAMMA_LAB_GUARD).
Gamma3Count classify_count(const Group& b, const Group& a, const Convention& c = {});

struct MutationSummary {
  std::size_t mutants = 0;
  std::size_t rejected = 0;
  std::size_t accepted = 0;
  std::size_t false_accepts = 0;  // accepted although the reference check rejects
};

/// Bumps every table entry of p by every nonzero element of A and runs
/// verify_pair on each mutant; `reference` decides whether an accepted
/// mutant really is a valid pair.
MutationSummary mutation_sweep(const Gamma3Pair& p, const Convention& c,
                               const std::function<bool(const Gamma3Pair&)>& reference);

}  // namespace gammalab
