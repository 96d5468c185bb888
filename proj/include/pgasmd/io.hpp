#ifndef PGASMD_IO_HPP
#define PGASMD_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "pgasmd/config.hpp"
#include "pgasmd/phasespace.hpp"
#include "pgasmd/shared_space.hpp"
#include "pgasmd/sim_loop.hpp"

namespace pgasmd {

/// Parameter grid for a strong-scaling sweep.
struct SweepSpec {
    std::vector<int> rank_counts;
    std::vector<Strategy> strategies;
    std::vector<Distribution> distributions;
    std::vector<AccessMode> access_modes;
    int repetitions = 5;

    void validate() const;  // throws ConfigError on empty lists / reps < 1
};

/// One summary row of a sweep.
struct SweepRow {
    Strategy strategy = Strategy::LockPerCell;
    Distribution distribution = Distribution::Blocked;
    AccessMode access_mode = AccessMode::LocalView;
    int ranks = 1;
    double mean_wall_s = 0.0;
    double stddev_wall_s = 0.0;
    AccessCounters totals;
    bool failed = false;
    std::string error;
};

void write_observables_csv(std::ostream& out, const std::vector<StepObservables>& observables);
void write_observables_csv_file(const std::string& path,
                                const std::vector<StepObservables>& observables);

std::string counters_json(const std::vector<AccessCounters>& per_rank,
                          const AccessCounters& totals);
void write_counters_json_file(const std::string& path,
                              const std::vector<AccessCounters>& per_rank,
                              const AccessCounters& totals);

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);
void write_sweep_csv_file(const std::string& path, const std::vector<SweepRow>& rows);

/// XYZ frame with element tag "Ar", one line per molecule.
void write_xyz(std::ostream& out, const std::vector<Molecule>& molecules,
               const std::string& comment);
void write_xyz_file(const std::string& path, const std::vector<Molecule>& molecules,
                    const std::string& comment);

/// Parse a sweep spec from JSON text / file. Missing lists default to all
/// strategies, blocked distribution, local access; repetitions default to 5.
SweepSpec parse_sweep_spec(const std::string& json_text);
SweepSpec load_sweep_spec(const std::string& path);

/// Run the cartesian sweep over the spec on top of a base config. Failing
/// combinations are marked failed and the sweep continues.
std::vector<SweepRow> run_sweep(const SweepSpec& spec, const SimConfig& base);

} // namespace pgasmd

#endif
