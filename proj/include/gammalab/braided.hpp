#pragma once

#include <map>
#include <string>
#include <vector>

#include "gammalab/abgroup.hpp"

namespace gammalab {

// Tables are indexed by the element order of FiniteGroup(b); values are
// canonical elements of A.

struct QuadraticMap {
  Group b, a;
  std::vector<IntVector> q;

  static QuadraticMap zero(const Group& b, const Group& a);
};

struct BilinearTable {
  Group b, a;
  std::size_t n = 0;
  std::vector<IntVector> t;
  const IntVector& at(std::size_t x, std::size_t y) const { return t[x * n + y]; }
};

struct AbelianCocyclePair {
  Group b, a;
  std::size_t n = 0;       // |B|
  std::vector<IntVector> h;  // associator, n³ entries
  std::vector<IntVector> c;  // braiding, n² entries

  static AbelianCocyclePair zero(const Group& b, const Group& a);
  IntVector& H(std::size_t x, std::size_t y, std::size_t z) { return h[(x * n + y) * n + z]; }
  const IntVector& H(std::size_t x, std::size_t y, std::size_t z) const { return h[(x * n + y) * n + z]; }
  IntVector& C(std::size_t x, std::size_t y) { return c[x * n + y]; }
  const IntVector& C(std::size_t x, std::size_t y) const { return c[x * n + y]; }
  bool operator==(const AbelianCocyclePair& o) const { return h == o.h && c == o.c; }
};

struct Violation {
  std::string axiom;
  std::vector<std::size_t> args;  // element indices
  IntVector defect;
};

/// Violations of a family of identities; keeps every count but only the first
/// few instances per axiom.
struct AxiomReport {
  std::map<std::string, std::size_t> counts;
  std::vector<Violation> violations;

  bool pass() const { return violations.empty(); }
  void record(const std::string& axiom, std::vector<std::size_t> args, IntVector defect);
  void merge(const AxiomReport& other);
  static constexpr std::size_t kKeptPerAxiom = 16;
};

/// q(0) = 0, q(x) = q(-x) and bilinear polarization.
AxiomReport is_quadratic(const QuadraticMap& q);
/// φ(x,y) = q(x+y) - q(x) - q(y); throws NotQuadratic.
BilinearTable polarization(const QuadraticMap& q);
/// Every quadratic map B → A, in increasing table order.
std::vector<QuadraticMap> enumerate_quadratic(const Group& b, const Group& a);
/// The homomorphism Γ₂B → A with f(γ₂ x) = q(x); throws NotQuadratic.
GroupHom hom_from_quadratic(const QuadraticMap& q);
/// q(x) = f(γ₂ x) for f : Γ₂B → A, where f.source() is apply(Γ₂, b).
QuadraticMap quadratic_from_hom(const Group& b, const GroupHom& f);

/// Normalization, pentagon and the two hexagons.
AxiomReport verify_cocycle(const AbelianCocyclePair& p);
/// τ(x) = c(x,x); throws InvalidCocycle.
QuadraticMap tau_of(const AbelianCocyclePair& p);
/// Difference of the two hexagon composites building the Yang–Baxter arrow.
IntVector yb_defect(const AbelianCocyclePair& p, std::size_t x, std::size_t y, std::size_t z);
/// Pair changed by the coboundary of a normalized table b : B² → A.
AbelianCocyclePair coboundary_action(const AbelianCocyclePair& p, const std::vector<IntVector>& b);
/// τ ≡ 0 and c(x,y) + c(y,x) ≡ 0; throws InvalidCocycle.
bool is_strictly_symmetric(const AbelianCocyclePair& p);

struct CocycleClass {
  AbelianCocyclePair representative;  // least member in table order
  QuadraticMap tau;
  std::size_t size = 0;
  bool has_zero_associator_member = false;
};

struct CocycleClassification {
  /// True when every normalized table pair was searched; otherwise the counts
  /// come from the parametrized solution space and classes are not listed.
  bool exhaustive = false;
  Int valid_pairs, coboundaries, classes, quadratic_maps;
  bool tau_constant_on_classes = false;
  bool tau_bijective = false;
  std::vector<CocycleClass> class_list;
  std::vector<AbelianCocyclePair> valid;  // exhaustive mode only
};

CocycleClassification classify_cocycles(const Group& b, const Group& a);

}  // namespace gammalab
