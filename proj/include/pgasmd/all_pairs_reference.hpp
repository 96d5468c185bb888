#ifndef PGASMD_ALL_PAIRS_REFERENCE_HPP
#define PGASMD_ALL_PAIRS_REFERENCE_HPP

#include <vector>

#include "pgasmd/config.hpp"
#include "pgasmd/phasespace.hpp"
#include "pgasmd/vec3.hpp"

namespace pgasmd {

/// Result of the serial all-pairs evaluation; forces follow the molecule
/// order of the input phasespace.
struct AllPairsResult {
    std::vector<Vec3> forces;
    double potential = 0.0;
};

/// Serial O(N^2) reference: evaluates every molecule pair once under minimum
/// image with its own self-contained 12-6 arithmetic. Kept deliberately
/// independent of the linked-cell engine so it can verify it.
AllPairsResult all_pairs_reference(const PhaseSpace& phasespace, const LjParams& lj);

} // namespace pgasmd

#endif
