#pragma once

#include <string>
#include <vector>

#include "gammalab/emspace.hpp"

namespace gammalab {

struct ClassificationPiece {
  std::string label;  // e.g. "Ext¹(LΓ₂B,A)"
  int ext_degree;     // i in Ext^i(LΓ_q B, A)
  int q;
  Group group;
  /// Ext^{>=2} between groups: zero over the integers, only nonzero for
  /// sheaves of groups.
  bool sheaf_only = false;
};

struct ClassificationReport {
  int n;
  /// Ext¹(H_{n-1}, A) ⊕ Hom(H_n, A); the splitting is not canonical.
  Group total;
  std::vector<ClassificationPiece> pieces;
};

/// H^n(K(B,2), A) for 2 <= n <= 7.
ClassificationReport cohomology_K2(const Group& b, const Group& a, int n);

struct ConsistencyReport {
  int n;
  bool pass;
  std::string total;       // described total group
  std::string pieces_sum;  // described direct sum of the pieces
  std::string detail;
};

/// Compares the universal-coefficient total with the filtration pieces:
/// equal orders for finite data, equal free rank and torsion order otherwise.
ConsistencyReport consistency_check(const Group& b, const Group& a, int n);

/// Ext^i(B, A) from the resolution, for any i <= 5.
Group ext_of_group(const Group& b, const Group& a, std::size_t i);

}  // namespace gammalab
