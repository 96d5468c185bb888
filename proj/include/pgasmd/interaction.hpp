#ifndef PGASMD_INTERACTION_HPP
#define PGASMD_INTERACTION_HPP

#include "pgasmd/config.hpp"
#include "pgasmd/shared_space.hpp"
#include "pgasmd/vec3.hpp"

namespace pgasmd {

/// One pair interaction: force on molecule a and the pair's potential
/// contribution (counted once). The force on b is the exact negation.
struct PairResult {
    Vec3 force_on_a;
    double potential = 0.0;
};

/// Lennard-Jones 12-6 kernel. r_vec is the displacement a -> b under minimum
/// image. Pairs at or beyond the cutoff contribute exactly zero (strict <).
/// Throws SingularityError at zero separation.
PairResult lj_pair(const Vec3& r_vec, const LjParams& params);

/// Cell-pair kernels. cell_a must be owned by `rank`; cell_b is cell_a itself
/// (intra-cell pair list) or one of its forward neighbors. Each returns the
/// potential accumulated by this task.
///
/// Locking behavior (lock_acquisitions):
///  - LPM: the lock(s) of the cell(s) whose forces are written, taken per
///    interacting molecule pair in ascending cell-id order (2 per inter-cell
///    interacting pair, 1 per intra-cell pair).
///  - LPC: both cell locks once per task regardless of molecule counts
///    (2 inter, 1 intra).
///  - LPC+: same as LPC when cell_b is local; for a remote cell_b, one
///    bulk_get, compute against the private buffer under cell_a's lock, then
///    at most one bulk_put_forces under cell_b's lock (skipped when no pair
///    was in cutoff). No remote element access occurs.
double cell_pair_lpm(int rank, int cell_a, int cell_b, SharedSpace& space, const LjParams& lj);
double cell_pair_lpc(int rank, int cell_a, int cell_b, SharedSpace& space, const LjParams& lj);
double cell_pair_lpc_plus(int rank, int cell_a, int cell_b, SharedSpace& space,
                          const LjParams& lj);

/// Process the intra-cell list and all forward neighbors of every cell this
/// rank owns, with the chosen strategy kernel. Collective: ends with a
/// barrier, after which every molecule's force is the full Newtonian sum.
/// Returns the rank-local potential sum.
double force_sweep(int rank, Strategy strategy, SharedSpace& space, const LjParams& lj);

} // namespace pgasmd

#endif
