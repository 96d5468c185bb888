#include "pgasmd/config.hpp"

#include <cmath>

#include "pgasmd/errors.hpp"

namespace pgasmd {

std::string to_string(Strategy s) {
    switch (s) {
        case Strategy::LockPerMolecule: return "lpm";
        case Strategy::LockPerCell: return "lpc";
        case Strategy::LockPerCellPrefetch: return "lpc+";
    }
    return "?";
}

std::string to_string(Distribution d) {
    return d == Distribution::Blocked ? "blocked" : "roundrobin";
}

std::string to_string(AccessMode m) {
    return m == AccessMode::LocalView ? "local" : "shared-only";
}

Strategy strategy_from_string(const std::string& s) {
    if (s == "lpm") return Strategy::LockPerMolecule;
    if (s == "lpc") return Strategy::LockPerCell;
    if (s == "lpc+") return Strategy::LockPerCellPrefetch;
    throw ConfigError("unknown strategy '" + s + "' (expected lpm, lpc or lpc+)");
}

Distribution distribution_from_string(const std::string& s) {
    if (s == "blocked") return Distribution::Blocked;
    if (s == "roundrobin") return Distribution::RoundRobin;
    throw ConfigError("unknown distribution '" + s + "' (expected blocked or roundrobin)");
}

AccessMode access_mode_from_string(const std::string& s) {
    if (s == "local") return AccessMode::LocalView;
    if (s == "shared-only") return AccessMode::SharedOnly;
    throw ConfigError("unknown access mode '" + s + "' (expected local or shared-only)");
}

void LjParams::validate() const {
    if (!(sigma > 0.0)) throw ConfigError("sigma must be positive");
    if (!(epsilon > 0.0)) throw ConfigError("epsilon must be positive");
    if (!(cutoff > 0.0)) throw ConfigError("cutoff must be positive");
}

double LjParams::potential_at_cutoff() const {
    const double s2 = (sigma * sigma) / (cutoff * cutoff);
    const double s6 = s2 * s2 * s2;
    return 4.0 * epsilon * (s6 * s6 - s6);
}

std::size_t SimConfig::cell_count() const {
    return static_cast<std::size_t>(grid_dims[0]) * grid_dims[1] * grid_dims[2];
}

Vec3 SimConfig::domain_lengths() const {
    return {grid_dims[0] * cell_edge(), grid_dims[1] * cell_edge(), grid_dims[2] * cell_edge()};
}

void SimConfig::validate() const {
    lj.validate();
    for (int d : grid_dims)
        if (d < 1) throw ConfigError("grid dimensions must be positive");
    if (!(density > 0.0)) throw ConfigError("density must be positive");
    if (!(dt > 0.0) || !std::isfinite(dt)) throw ConfigError("dt must be positive and finite");
    if (steps < 0) throw ConfigError("steps must be nonnegative");
    if (ranks < 1) throw ConfigError("ranks must be at least 1");
    if (static_cast<std::size_t>(ranks) > cell_count())
        throw ConfigError("ranks must not exceed the cell count");
    if (observable_stride < 1) throw ConfigError("observable stride must be at least 1");
}

} // namespace pgasmd
