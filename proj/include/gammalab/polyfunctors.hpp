#pragma once

#include <string>
#include <vector>

#include "gammalab/abgroup.hpp"

namespace gammalab {

enum class FunctorId { Tensor2, Lambda2, Sym2, Gamma2, Gamma3 };

std::string functor_name(FunctorId f);
/// Accepts "Tensor2", "Lambda2", "Sym2", "Gamma2", "Gamma3" (case-insensitive).
FunctorId parse_functor(const std::string& name);
int functor_degree(FunctorId f);

/// Divided-power algebra of Z^n in degrees 1..3. A degree-d monomial is a
/// sorted index multiset {i1 <= ... <= id} standing for the product of
/// γ_k(e_i) over the distinct indices, k the multiplicity. Monomials are
/// ordered lexicographically.
class DividedPowers {
 public:
  explicit DividedPowers(std::size_t n);

  std::size_t rank() const { return n_; }
  std::size_t dim(int d) const { return monomials_[d].size(); }
  const std::vector<std::vector<std::size_t>>& monomials(int d) const { return monomials_[d]; }
  std::size_t index(const std::vector<std::size_t>& sorted) const;

  /// γ_m(v) for v ∈ Z^n, m = 1..3.
  IntVector gamma(int m, const IntVector& v) const;
  /// Product of a degree-p and a degree-q element.
  IntVector product(int p, const IntVector& a, int q, const IntVector& b) const;
  IntVector unit(int d, const std::vector<std::size_t>& sorted) const;

 private:
  std::size_t n_;
  std::vector<std::vector<std::vector<std::size_t>>> monomials_;
};

/// Number of standard monomials of F(Z^n).
std::size_t monomial_count(FunctorId f, std::size_t n);
/// Symbolic names such as "g2(e0)", "e0*e1", "e0^e1", "e0(x)e1".
std::vector<std::string> monomial_tags(FunctorId f, std::size_t n);

/// F(m): F(Z^cols) → F(Z^rows) on standard monomials.
IntMatrix functor_matrix(FunctorId f, const IntMatrix& m);

struct FunctorValue {
  Group group;
  std::vector<std::string> tags;
};

/// F(B) as F(Z^g) modulo the subgroup generated by the relator monomials.
FunctorValue apply(FunctorId f, const Group& b);
GroupHom induced_map(FunctorId f, const GroupHom& h);

/// Coordinates of γ₂(x) in the presentation apply(Gamma2, B).
IntVector gamma2_of(const Group& b, const IntVector& x);
/// γ₂(x) for every x in elements(B), in that order; throws InfiniteGroup.
std::vector<IntVector> universal_gamma2(const Group& b);

/// Γ₂B ⊗ B → Γ₃B, γ₂-monomial ⊗ e_k ↦ product.
GroupHom mult_map(const Group& b);
/// Sym²B → Γ₂B, xy ↦ x·y in the divided-power algebra.
GroupHom sym2_to_gamma2(const Group& b);
/// Γ₂B → B/2B, γ₂(e_i) ↦ e_i, e_i·e_j ↦ 0.
GroupHom gamma2_to_mod2(const Group& b);
/// Γ₃B → B/3B, γ₃(e_i) ↦ e_i, other monomials ↦ 0.
GroupHom gamma3_to_mod3(const Group& b);
/// Γ₂B → B⊗B, γ₂(x) ↦ x⊗x.
GroupHom gamma2_to_tensor2(const Group& b);
/// B⊗B → Λ²B, x⊗y ↦ x∧y.
GroupHom tensor2_to_lambda2(const Group& b);

/// The same natural maps on free modules Z^n, as integer matrices on the
/// standard monomials. The section and retraction split the levelwise
/// sequence Γ₂ → ⊗² → Λ² of free modules: section sends e_i∧e_j to e_i⊗e_j,
/// retraction is a left inverse of γ₂(x) ↦ x⊗x.
IntMatrix gamma2_to_tensor2_matrix(std::size_t n);
IntMatrix tensor2_to_lambda2_matrix(std::size_t n);
IntMatrix lambda2_section_matrix(std::size_t n);
IntMatrix tensor2_retraction_matrix(std::size_t n);

struct ExactnessNode {
  std::string where;
  bool exact;
  Group defect;  // ker/im at this node; trivial iff exact
};

struct SequenceReport {
  std::string name;
  std::vector<std::pair<std::string, Group>> terms;
  std::vector<ExactnessNode> nodes;
  bool exact() const;
};

/// 0 → Sym²B → Γ₂B → B/2B → 0 and Γ₂B⊗B → Γ₃B → B/3B → 0.
std::vector<SequenceReport> check_sequences(const Group& b);

/// Exactness nodes for X --f--> Y --g--> Z reported at Y.
ExactnessNode exactness_node(const std::string& where, const GroupHom& f, const GroupHom& g);
ExactnessNode injectivity_node(const std::string& where, const GroupHom& f);
ExactnessNode surjectivity_node(const std::string& where, const GroupHom& f);

}  // namespace gammalab
