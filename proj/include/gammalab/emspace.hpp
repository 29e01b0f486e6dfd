#pragma once

#include <vector>

#include "gammalab/derived.hpp"

namespace gammalab {

struct GradedPiece {
  int p;
  int q;
  Group group;  // L_p Γ_q B (Γ_1 is the identity functor)
};

struct GradedPieces {
  int n;
  std::vector<GradedPiece> pieces;
  /// Direct sum of the pieces. Degeneration only fixes the associated
  /// graded, so this is the split candidate for H_n(K(B,2)).
  Group assembled;
};

/// Pieces L_pΓ_q B on the line p + 2q = n, q >= 1, for 0 <= n <= 6.
GradedPieces homology_K2(const Group& b, int n);
/// Same as homology_K2, also allowing n = 7 (needed for H^7 by universal
/// coefficients).
GradedPieces filtration_pieces(const Group& b, int n);

/// Λⁿ of a free group of rank <= 6; throws NotFree.
Group homology_K1_free(const Group& b, int n);

/// H_n(K(B,2)) from the iterated bar construction B̄(B̄(Z[B])) of the group
/// ring; guards: |B| <= 3 and n <= 5 (scaled by GAMMA_LAB_GUARD).
Group bar_homology_oracle(const Group& b, int n);

/// The chain complex behind bar_homology_oracle, degrees 0..top, exposed for
/// tests (d² = 0) and for debugging dumps.
ChainOfFree double_bar_complex(const Group& b, int top);

/// Normalized chains of the simplicial set K(B,2) whose n-simplices are
/// B-valued 2-cocycles on Δ^n, degrees 0..top. Only feasible for tiny B and
/// top <= 5.
ChainOfFree simplicial_k2_complex(const Group& b, int top);

}  // namespace gammalab
