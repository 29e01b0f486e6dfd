#pragma once

#include "gammalab/gamma3.hpp"

namespace gammalab {

/// Second implementation of verify_pair for cyclic B and cyclic A, on plain
/// machine integers with every composite written out. Used as the reference
/// when deciding whether an accepted mutant is a false accept. Throws
/// InputError for non-cyclic groups or |B|, |A| above 64.
bool plain_pair_valid(const Gamma3Pair& p, const Convention& c = {});

}  // namespace gammalab
