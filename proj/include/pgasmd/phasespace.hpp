#ifndef PGASMD_PHASESPACE_HPP
#define PGASMD_PHASESPACE_HPP

#include <cstdint>
#include <vector>

#include "pgasmd/config.hpp"
#include "pgasmd/vec3.hpp"

namespace pgasmd {

struct Molecule {
    std::uint64_t id = 0;
    Vec3 position;
    Vec3 velocity;
    Vec3 force;
};

/// The system of molecules plus the periodic domain it lives in.
struct PhaseSpace {
    std::vector<Molecule> molecules;
    Vec3 domain_lengths;
};

/// Allocate an empty phasespace sized for the configured density.
/// domain_lengths = grid_dims * cell edge.
PhaseSpace phasespace_init(const SimConfig& config);

/// Place molecules on a simple cubic lattice and draw velocities from a
/// seeded Maxwell-Boltzmann distribution at reduced temperature 1, then shift
/// them so the total momentum is zero. The molecule count is the largest
/// perfect cube m^3 <= round(density * volume).
void grid_generator(PhaseSpace& phasespace, const SimConfig& config);

/// Sum of 0.5 * |v|^2 over all molecules (unit mass).
double kinetic_energy(const PhaseSpace& phasespace);

} // namespace pgasmd

#endif
