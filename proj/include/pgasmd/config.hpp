#ifndef PGASMD_CONFIG_HPP
#define PGASMD_CONFIG_HPP

#include <array>
#include <cstdint>
#include <string>

#include "pgasmd/vec3.hpp"

namespace pgasmd {

/// Synchronization strategy for the force sweep.
///  - LockPerMolecule: acquire the cell lock(s) once per interacting molecule pair.
///  - LockPerCell: acquire the cell lock(s) once per cell-pair task.
///  - LockPerCellPrefetch: lock per cell, plus bulk prefetch / copy-at-once for
///    remote neighbor cells.
enum class Strategy { LockPerMolecule, LockPerCell, LockPerCellPrefetch };

/// How cell ids map to owning ranks.
enum class Distribution { Blocked, RoundRobin };

/// Which access path ranks use for cells they own. SharedOnly forces every
/// access through the generic element path, as an unoptimized baseline.
enum class AccessMode { LocalView, SharedOnly };

std::string to_string(Strategy s);
std::string to_string(Distribution d);
std::string to_string(AccessMode m);

Strategy strategy_from_string(const std::string& s);          // "lpm" | "lpc" | "lpc+"
Distribution distribution_from_string(const std::string& s);  // "blocked" | "roundrobin"
AccessMode access_mode_from_string(const std::string& s);     // "local" | "shared-only"

/// Lennard-Jones 12-6 parameters in reduced units.
struct LjParams {
    double sigma = 1.0;
    double epsilon = 1.0;
    double cutoff = 3.0;
    bool shift_potential = false;

    void validate() const;  // throws ConfigError
    /// Potential value at the cutoff (the shift reference).
    double potential_at_cutoff() const;
};

/// Full parameter set for one run.
struct SimConfig {
    std::array<int, 3> grid_dims{4, 4, 4};
    double density = 0.3;  // molecules per unit volume
    LjParams lj;
    double dt = 0.001;
    int steps = 100;
    int ranks = 1;
    Strategy strategy = Strategy::LockPerCell;
    Distribution distribution = Distribution::Blocked;
    AccessMode access_mode = AccessMode::LocalView;
    std::uint64_t seed = 1;
    int observable_stride = 1;

    /// Cell edge length; fixed to the cut-off radius.
    double cell_edge() const { return lj.cutoff; }
    std::size_t cell_count() const;
    Vec3 domain_lengths() const;

    void validate() const;  // throws ConfigError
};

} // namespace pgasmd

#endif
