#ifndef PGASMD_INTEGRATOR_HPP
#define PGASMD_INTEGRATOR_HPP

#include "pgasmd/shared_space.hpp"

namespace pgasmd {

/// v += dt_half * f for every molecule in the rank's cells (unit mass).
/// Owner-exclusive, no locks.
void kick(int rank, SharedSpace& space, double dt_half);

/// p += dt * v followed by a periodic wrap. Throws StabilityError if any
/// molecule would move a full cell edge or more in one step.
void drift(int rank, SharedSpace& space, double dt);

/// Set all force components of the rank's molecules to exactly zero.
void zero_forces(int rank, SharedSpace& space);

/// Move every molecule whose position now maps to a different cell into that
/// cell. Collective (internal barriers): ranks first extract leavers from
/// their own cells, then insert them at their destinations under the
/// destination cell's lock. Remote insertions are accounted as one bulk
/// transfer per (source cell, destination cell) batch. Throws CapacityError
/// if a destination cell is full.
void migrate(int rank, SharedSpace& space);

/// Rank-local kinetic energy partial over owned cells.
double kinetic_partial(int rank, SharedSpace& space);

} // namespace pgasmd

#endif
