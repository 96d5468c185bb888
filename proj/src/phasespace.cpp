#include "pgasmd/phasespace.hpp"

#include <cmath>
#include <random>

#include "pgasmd/errors.hpp"

namespace pgasmd {

PhaseSpace phasespace_init(const SimConfig& config) {
    config.validate();
    PhaseSpace ps;
    ps.domain_lengths = config.domain_lengths();
    const double volume = ps.domain_lengths.x * ps.domain_lengths.y * ps.domain_lengths.z;
    ps.molecules.reserve(static_cast<std::size_t>(std::llround(config.density * volume)));
    return ps;
}

void grid_generator(PhaseSpace& ps, const SimConfig& config) {
    config.validate();
    if (!ps.molecules.empty()) throw GenerationError("phasespace must be empty");

    const Vec3 box = ps.domain_lengths;
    const double volume = box.x * box.y * box.z;
    const long long target = std::llround(config.density * volume);
    if (target < 1) throw GenerationError("density too low: no molecules fit the domain");

    // Largest m^3 <= target.
    auto m = static_cast<long long>(std::floor(std::cbrt(static_cast<double>(target)) + 1e-9));
    while ((m + 1) * (m + 1) * (m + 1) <= target) ++m;
    const long long count = m * m * m;

    const Vec3 spacing{box.x / static_cast<double>(m), box.y / static_cast<double>(m),
                       box.z / static_cast<double>(m)};
    const double min_spacing = std::min(spacing.x, std::min(spacing.y, spacing.z));
    if (min_spacing < 0.5 * config.lj.sigma)
        throw GenerationError("lattice spacing below 0.5 sigma: unphysical overlap");

    ps.molecules.reserve(static_cast<std::size_t>(count));
    std::uint64_t next_id = 0;
    for (long long i = 0; i < m; ++i) {
        for (long long j = 0; j < m; ++j) {
            for (long long k = 0; k < m; ++k) {
                Molecule mol;
                mol.id = next_id++;
                mol.position = {(i + 0.5) * spacing.x, (j + 0.5) * spacing.y,
                                (k + 0.5) * spacing.z};
                ps.molecules.push_back(mol);
            }
        }
    }

    // Maxwell-Boltzmann at reduced temperature 1 (unit mass), then remove the
    // center-of-mass drift so total momentum is zero.
    std::mt19937_64 rng(config.seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Vec3 vsum;
    for (auto& mol : ps.molecules) {
        mol.velocity = {gauss(rng), gauss(rng), gauss(rng)};
        vsum += mol.velocity;
    }
    const double inv_n = 1.0 / static_cast<double>(count);
    const Vec3 vmean = vsum * inv_n;
    for (auto& mol : ps.molecules) {
        mol.velocity -= vmean;
        mol.force = {0.0, 0.0, 0.0};
    }
}

double kinetic_energy(const PhaseSpace& ps) {
    double sum = 0.0;
    for (const auto& mol : ps.molecules) sum += 0.5 * norm2(mol.velocity);
    return sum;
}

} // namespace pgasmd
