#ifndef PGASMD_CELL_GRID_HPP
#define PGASMD_CELL_GRID_HPP

#include <array>
#include <cstddef>
#include <vector>

#include "pgasmd/config.hpp"
#include "pgasmd/phasespace.hpp"

namespace pgasmd {

struct CellIndex {
    int i = 0;
    int j = 0;
    int k = 0;

    friend bool operator==(const CellIndex& a, const CellIndex& b) {
        return a.i == b.i && a.j == b.j && a.k == b.k;
    }
};

/// Periodic 3D cell decomposition with cell edge equal to the cut-off radius.
///
/// Cell ids are row-major: id = i*ny*nz + j*nz + k, so Blocked ownership of
/// consecutive id blocks yields a slab decomposition along i. The forward
/// stencil enumerates, for each cell, the wrapped neighbors reachable through
/// a lexicographically positive offset; over the whole grid it visits every
/// unordered neighbor pair exactly once. Grids with a dimension below 3 make
/// some neighbors reachable from both sides; such pairs are kept only in the
/// cell with the smaller id (those grids appear in tests only).
class CellGrid {
public:
    CellGrid(std::array<int, 3> dims, double cell_edge, Distribution distribution, int ranks);

    const std::array<int, 3>& dims() const { return dims_; }
    double cell_edge() const { return cell_edge_; }
    Distribution distribution() const { return distribution_; }
    int ranks() const { return ranks_; }
    std::size_t cell_count() const { return static_cast<std::size_t>(dims_[0]) * dims_[1] * dims_[2]; }
    Vec3 domain_lengths() const;

    int cell_id_of_index(const CellIndex& idx) const;  // throws DomainError
    CellIndex index_of_cell_id(int id) const;          // throws DomainError
    int owner_of_cell(int id) const;                   // throws DomainError

    std::vector<CellIndex> forward_neighbors(const CellIndex& idx) const;
    /// Precomputed forward stencil as cell ids (same pairs as forward_neighbors).
    const std::vector<int>& forward_ids(int id) const;

    /// Cell index covering a position; coordinates exactly on a cell's upper
    /// face belong to the next cell. Throws ContainmentError outside [0, L).
    CellIndex index_for_position(const Vec3& p) const;

    /// Number of forward cell pairs whose two cells have different owners.
    std::size_t remote_pair_count() const;

private:
    std::array<int, 3> dims_;
    double cell_edge_;
    Distribution distribution_;
    int ranks_;
    std::size_t block_size_;  // Blocked: cells per rank, ceil division
    std::vector<std::vector<int>> forward_;
};

/// Bucket molecules into per-cell lists by position. Throws ContainmentError
/// if any position lies outside the domain (a missed wrap upstream).
std::vector<std::vector<Molecule>> assign_molecules_to_cells(const PhaseSpace& phasespace,
                                                             const CellGrid& grid);

} // namespace pgasmd

#endif
