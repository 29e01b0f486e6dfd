#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gammalab/matrix.hpp"

namespace gammalab {

/// A finitely generated abelian group Z^g / L, where L is the lattice spanned
/// by the columns of the relation matrix (g rows, one column per relator).
class Group {
 public:
  Group() : Group(0, IntMatrix(0, 0)) {}
  Group(std::size_t generators, IntMatrix relations);

  static Group cyclic(const Int& n);  // n = 0 gives Z
  static Group free(std::size_t rank);
  static Group trivial() { return free(0); }
  /// Z/d1 ⊕ Z/d2 ⊕ ... ⊕ Z^free_rank, one generator per summand.
  static Group from_invariants(std::size_t free_rank, const IntVector& factors);

  std::size_t generators() const { return gens_; }
  const IntMatrix& relations() const { return rel_; }

  std::size_t free_rank() const { return free_rank_; }
  const IntVector& invariant_factors() const { return factors_; }
  bool is_finite() const { return free_rank_ == 0; }
  bool is_trivial() const { return free_rank_ == 0 && factors_.empty(); }
  /// Group order; throws InfiniteGroup when free_rank > 0.
  Int order() const;
  /// Exponent of a finite group (lcm of invariant factors, 1 for trivial).
  Int exponent() const;

  /// Isomorphism-type equality.
  bool isomorphic(const Group& other) const {
    return free_rank_ == other.free_rank_ && factors_ == other.factors_;
  }

  /// Unique representative of x + L.
  IntVector reduce(const IntVector& x) const;
  bool is_zero(const IntVector& x) const;
  bool contains_relation(const IntVector& x) const { return is_zero(x); }
  IntVector add(const IntVector& x, const IntVector& y) const;
  IntVector neg(const IntVector& x) const;
  IntVector scale(const Int& k, const IntVector& x) const;
  IntVector zero() const { return IntVector(gens_); }
  IntVector basis(std::size_t i) const;

  /// Coordinates in Z/d1 ⊕ Z/d2 ⊕ ... ⊕ Z^free: torsion coordinates first,
  /// in the order of invariant_factors() and reduced into [0, d), then the
  /// free coordinates.
  IntVector to_invariant(const IntVector& x) const;
  IntVector from_invariant(const IntVector& y) const;

  /// Relation lattice with a basis of linearly independent columns.
  const IntMatrix& relation_basis() const { return rel_basis_; }

  /// Human-readable isomorphism type, e.g. "Z/2 + Z/4", "Z^2", "0".
  std::string describe() const;

 private:
  std::size_t gens_;
  IntMatrix rel_;
  IntMatrix rel_basis_;
  RowEchelon echelon_;
  std::size_t free_rank_ = 0;
  IntVector factors_;
  // Rows of the Smith transform U that survive (diag != 1), and the matching
  // columns of U^{-1}; torsion rows first, then free rows.
  IntMatrix to_inv_;
  IntMatrix from_inv_;
};

std::string describe_invariants(std::size_t free_rank, const IntVector& factors);

/// A homomorphism source → target, matrix of size target.gens × source.gens.
class GroupHom {
 public:
  GroupHom() = default;
  /// Throws InputError unless every source relator maps into the target
  /// relation lattice.
  GroupHom(Group source, Group target, IntMatrix matrix);

  static GroupHom identity(const Group& g);
  static GroupHom zero(const Group& source, const Group& target);

  const Group& source() const { return src_; }
  const Group& target() const { return dst_; }
  const IntMatrix& matrix() const { return m_; }

  IntVector operator()(const IntVector& x) const { return dst_.reduce(m_.apply(x)); }
  GroupHom compose_after(const GroupHom& first) const;  // this ∘ first

  bool is_zero() const;
  bool equals(const GroupHom& other) const;
  bool is_injective() const;
  bool is_surjective() const;

 private:
  Group src_;
  Group dst_;
  IntMatrix m_;
};

/// A subquotient S/T of Z^m given by generating columns S ⊇ T, presented with
/// one generator per column of S. inclusion maps those generators into Z^m.
struct Subquotient {
  Group group;
  IntMatrix inclusion;
};

/// S/T for column spans S ⊇ T inside Z^m.
Subquotient subquotient(const IntMatrix& s, const IntMatrix& t);

/// Generators (columns in Z^{source.gens}) of the preimage of the target
/// relation lattice; includes the source relations.
IntMatrix kernel_lattice(const GroupHom& f);
/// Columns spanning f(Z^{source}) + target relations, in Z^{target.gens}.
IntMatrix image_lattice(const GroupHom& f);

Subquotient kernel(const GroupHom& f);
Subquotient image(const GroupHom& f);
Group cokernel(const GroupHom& f);

/// True when the column spans of a and b agree.
bool same_lattice(const IntMatrix& a, const IntMatrix& b);
/// True when span(a) ⊆ span(b).
bool lattice_contains(const IntMatrix& b, const IntMatrix& a);

/// ker g / im f for f: X → Y, g: Y → Z.
Subquotient homology_at(const GroupHom& f, const GroupHom& g);
/// im f == ker g.
bool exact_at(const GroupHom& f, const GroupHom& g);

Group direct_sum(const Group& a, const Group& b);
Group direct_sum(const std::vector<Group>& parts);
Group tensor(const Group& a, const Group& b);
/// A^n with A's relations repeated blockwise.
Group power(const Group& a, std::size_t n);

struct HomGroup {
  Group group;
  /// One homomorphism B → A per generator of `group`.
  std::vector<GroupHom> witnesses;
};

HomGroup hom_group(const Group& b, const Group& a);
Group ext1(const Group& b, const Group& a);
Group tor1(const Group& b, const Group& c);

/// Elements of a finite group in lexicographic order of canonical
/// representatives; throws InfiniteGroup.
std::vector<IntVector> elements(const Group& g);

/// Index tables of a small finite group: element i has representative
/// elements()[i]; element 0 is zero.
class FiniteGroup {
 public:
  explicit FiniteGroup(Group g);

  const Group& group() const { return g_; }
  std::size_t size() const { return n_; }
  const IntVector& element(std::size_t i) const { return elems_[i]; }
  std::size_t index_of(const IntVector& reduced) const;
  std::size_t index_of_any(const IntVector& x) const { return index_of(g_.reduce(x)); }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return add_[a * n_ + b]; }
  std::uint32_t neg(std::uint32_t a) const { return neg_[a]; }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
  std::uint32_t mul(long k, std::uint32_t a) const;

 private:
  Group g_;
  std::size_t n_;
  std::vector<IntVector> elems_;
  std::map<IntVector, std::uint32_t> index_;
  std::vector<std::uint32_t> add_;
  std::vector<std::uint32_t> neg_;
};

}  // namespace gammalab
