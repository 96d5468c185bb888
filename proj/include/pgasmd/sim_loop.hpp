#ifndef PGASMD_SIM_LOOP_HPP
#define PGASMD_SIM_LOOP_HPP

#include <vector>

#include "pgasmd/config.hpp"
#include "pgasmd/phasespace.hpp"
#include "pgasmd/shared_space.hpp"

namespace pgasmd {

/// Global observables reduced at one step.
struct StepObservables {
    int step = 0;
    double kinetic = 0.0;
    double potential = 0.0;
    double total = 0.0;        // kinetic + potential as summed
    double temperature = 0.0;  // 2 K / (3 N), reduced units
};

struct SimResult {
    std::vector<StepObservables> observables;
    std::vector<AccessCounters> rank_counters;
    AccessCounters total_counters;
    std::vector<Molecule> final_state;  // sorted by molecule id
    double wall_seconds = 0.0;
};

/// Run the full loop: distribute, initial force sweep, then per step
/// kick(dt/2), drift, migrate, zero forces, force sweep, kick(dt/2), reduce
/// observables. One thread per rank executes the collective phase program.
/// Errors in any rank abort the run with the failing step index
/// (SimulationError).
SimResult simulate(const SimConfig& config);

/// Same, but starting from a caller-built phasespace (positions must lie in
/// the configured domain). The config's density is ignored for placement.
SimResult simulate(const SimConfig& config, const PhaseSpace& initial);

} // namespace pgasmd

#endif
