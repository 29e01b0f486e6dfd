#pragma once

#include <string>
#include <vector>

#include "gammalab/braided.hpp"

namespace gammalab {

/// Trivialized biextension of B × B by A: the partial laws are
/// (a, a') ↦ a + a' + f(x,x';y) over E_{x,y} × E_{x',y} and
/// (a, a') ↦ a + a' + g(x;y,y') over E_{x,y} × E_{x,y'}.
struct BiextensionData {
  Group b, a;
  std::size_t n = 0;
  std::vector<IntVector> f;  // f(x,x';y) at (x*n + x')*n + y
  std::vector<IntVector> g;  // g(x;y,y') at (x*n + y)*n + y'
  bool weak = false;         // commutativity of the laws not asserted

  static BiextensionData zero(const Group& b, const Group& a);
  IntVector& F(std::size_t x, std::size_t x2, std::size_t y) { return f[(x * n + x2) * n + y]; }
  const IntVector& F(std::size_t x, std::size_t x2, std::size_t y) const { return f[(x * n + x2) * n + y]; }
  IntVector& G(std::size_t x, std::size_t y, std::size_t y2) { return g[(x * n + y) * n + y2]; }
  const IntVector& G(std::size_t x, std::size_t y, std::size_t y2) const { return g[(x * n + y) * n + y2]; }
};

/// Normalization, associativity of both laws, interchange, and (unless weak)
/// commutativity of both laws.
AxiomReport verify_biextension(const BiextensionData& d);

/// Change of trivialization by t : B × B → A (normalized).
BiextensionData retrivialize(const BiextensionData& d, const std::vector<IntVector>& t);

struct CommutatorReport {
  /// κ(x,x',y) = f(x,x';y) - f(x',x;y) and κ₂(x,y,y') = g(x;y,y') - g(x;y',y).
  std::vector<IntVector> first, second;
  bool trilinear = false;
  bool alternating = false;
  bool vanishes = false;
};

/// Commutators of the two laws of a weak biextension; throws AxiomFailure
/// when associativity or interchange fail.
CommutatorReport commutator_map(const BiextensionData& d);

struct BiextensionFromCocycle {
  BiextensionData biext;           // E_{x,y} = Isom(X_y X_x, X_x X_y)
  std::vector<IntVector> section;  // s(x,y) = c(y,x), the braiding
  AxiomReport section_report;      // bimultiplicativity of s
  bool standard = false;           // commutative laws
  bool trivialized = false;        // s is bimultiplicative
};

/// Throws InvalidCocycle unless the pair passes verify_cocycle.
BiextensionFromCocycle biext_from_cocycle(const AbelianCocyclePair& p);
/// The associator part alone (no hexagons needed): the weak biextension
/// built from h.
BiextensionData weak_biext_from_associator(const Group& b, const Group& a, const std::vector<IntVector>& h);

/// Compares the identity of X_x X_x with the braiding on the diagonal; equals
/// -tau_of(p) tablewise. Throws InvalidCocycle.
QuadraticMap alternating_quadratic(const AbelianCocyclePair& p);

// ---------------------------------------------------------------------------

enum class SigmaConvention {
  /// f(-x,-y;-z) - f(x,y;z) = Θλ(x,y,z) and λ(x) + λ(-x) = 0.
  Theta,
  /// λ(x+y) - λ(x) - λ(y) = -f(x,-x;y) - f(y,-y;-x) and λ(-x) = λ(x).
  Literal,
};
std::string sigma_convention_name(SigmaConvention c);
SigmaConvention parse_sigma_convention(const std::string& s);

/// Cube structure in its symmetric-biextension form plus the symmetry λ.
struct SigmaData {
  BiextensionData cube;      // g(x;y,y') = f(y,y';x)
  std::vector<IntVector> lambda;

  static SigmaData zero(const Group& b, const Group& a);
};

/// Symmetric biextension data with g(x;y,y') = f(y,y';x).
BiextensionData symmetric_biextension(const Group& b, const Group& a, const std::vector<IntVector>& f);

/// Cube checks (biextension axioms, g from f, S₃-symmetry of f) and the λ
/// equations of the chosen convention.
AxiomReport verify_sigma(const SigmaData& d, SigmaConvention conv = SigmaConvention::Theta);

/// Re-trivialization by t : B → A with t(0) = 0: f gains Θt and λ gains
/// t(-x) - t(x).
SigmaData retrivialize(const SigmaData& d, const std::vector<IntVector>& t);

struct SigmaClassification {
  SigmaConvention convention;
  Int solutions;        // SigmaData passing verify_sigma
  Int gauge_orbit;      // re-trivializations keeping a solution a solution
  Int classes;
  bool gauge_invariant = false;  // every re-trivialization preserves the equations
  Int expected;         // |Ext¹(LΓ₂B, A)|
  bool matches() const { return classes == expected; }
};

/// Exhaustive for |B| <= 4 and |A| <= 4 (scaled by GAMMA_LAB_GUARD).
SigmaClassification classify_sigma(const Group& b, const Group& a,
                                   SigmaConvention conv = SigmaConvention::Theta);

}  // namespace gammalab
