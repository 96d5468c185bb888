#ifndef PGASMD_SHARED_SPACE_HPP
#define PGASMD_SHARED_SPACE_HPP

#include <atomic>
#include <condition_variable>
#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "pgasmd/cell_grid.hpp"
#include "pgasmd/config.hpp"
#include "pgasmd/errors.hpp"
#include "pgasmd/phasespace.hpp"

namespace pgasmd {

/// Per-rank tally of every accounted access path. "Remote" means the target
/// cell has affinity to a different rank; ranks are threads in one process,
/// so these counters are the stand-in for network traffic.
struct AccessCounters {
    std::uint64_t local_element_reads = 0;
    std::uint64_t local_element_writes = 0;
    std::uint64_t remote_element_reads = 0;
    std::uint64_t remote_element_writes = 0;
    std::uint64_t bulk_gets = 0;
    std::uint64_t bulk_puts = 0;
    std::uint64_t bulk_bytes = 0;
    std::uint64_t lock_acquisitions = 0;

    AccessCounters& operator+=(const AccessCounters& o);
    void reset() { *this = AccessCounters{}; }
    std::uint64_t element_total() const {
        return local_element_reads + local_element_writes + remote_element_reads +
               remote_element_writes;
    }
};

/// Scalar components addressable through the element access path.
enum class ScalarField {
    PositionX,
    PositionY,
    PositionZ,
    VelocityX,
    VelocityY,
    VelocityZ,
    ForceX,
    ForceY,
    ForceZ,
};

/// Nominal width of one real-triple record for byte accounting.
inline constexpr std::uint64_t kTripleBytes = 24;

/// Fixed-capacity molecule container; the unit of locality, locking and
/// transfer. Storage is struct-of-arrays so positions can be read lock-free
/// while forces are updated under the cell lock.
class Cell {
public:
    Cell(int id, std::size_t capacity) : id_(id), capacity_(capacity) {
        ids_.reserve(capacity);
        positions_.reserve(capacity);
        velocities_.reserve(capacity);
        forces_.reserve(capacity);
    }

    int id() const { return id_; }
    std::size_t size() const { return ids_.size(); }
    std::size_t capacity() const { return capacity_; }

    void append(const Molecule& m);  // throws CapacityError when full
    void remove_slot(std::size_t slot);
    Molecule molecule_at(std::size_t slot) const;

    std::vector<std::uint64_t> ids_;
    std::vector<Vec3> positions_;
    std::vector<Vec3> velocities_;
    std::vector<Vec3> forces_;
    std::mutex mutex;

private:
    int id_;
    std::size_t capacity_;
};

/// Rank-private staging buffer for one remote cell: positions copied in by
/// bulk_get, force contributions accumulated locally and merged back by
/// bulk_put_forces.
struct PrefetchBuffer {
    int cell_id = -1;
    std::vector<Vec3> positions;
    std::vector<Vec3> forces;  // zero-initialized accumulation slots
};

/// Loop phases, used for debug-build assertions that positions are frozen
/// while forces are being accumulated.
enum class Phase { Setup, ZeroForces, ForceSweep, Integrate, Migrate };

class SharedSpace;

/// Direct, local-pointer-style access to a cell the rank owns.
///
/// Counting model: acquiring a span costs one local element read (const
/// spans) or one local element write (mutable spans); iterating the span is
/// raw memory access the runtime does not see. This mirrors the difference
/// between a local C pointer and the generic per-element shared path.
class LocalCellView {
public:
    std::size_t size() const;                         // metadata, uncounted
    std::span<const std::uint64_t> molecule_ids() const;  // +1 local read
    std::span<const Vec3> positions() const;          // +1 local read
    std::span<const Vec3> velocities() const;         // +1 local read
    std::span<const Vec3> forces() const;             // +1 local read
    std::span<Vec3> positions_mut();                  // +1 local write
    std::span<Vec3> velocities_mut();                 // +1 local write
    std::span<Vec3> forces_mut();                     // +1 local write

private:
    friend class SharedSpace;
    LocalCellView(Cell* cell, AccessCounters* counters, const SharedSpace* space)
        : cell_(cell), counters_(counters), space_(space) {}
    Cell* cell_;
    AccessCounters* counters_;
    const SharedSpace* space_;
};

/// RAII guard for one or two cell locks, always acquired in ascending cell-id
/// order. Each acquisition increments the acquiring rank's lock counter.
class CellLockGuard {
public:
    CellLockGuard(CellLockGuard&&) noexcept = default;
    ~CellLockGuard() = default;

private:
    friend class SharedSpace;
    CellLockGuard() = default;
    std::unique_lock<std::mutex> first_;
    std::unique_lock<std::mutex> second_;
};

/// Instrumented partitioned store of cells across ranks.
///
/// Every cell lives in exactly one partition (the one owner_of_cell names)
/// inside a single address space; all cross-partition traffic flows through
/// the accounted element and bulk operations. Collective operations (barrier,
/// all_reduce_sum) must be called by every rank or the program stalls by
/// contract; a failing rank uses abort() to release the others.
class SharedSpace {
public:
    /// Build partitions from per-cell molecule lists. cell_capacity 0 picks a
    /// default with headroom above the mean occupancy.
    static SharedSpace distribute(std::vector<std::vector<Molecule>> cells, const CellGrid& grid,
                                  AccessMode mode, std::size_t cell_capacity = 0);

    SharedSpace(SharedSpace&&) noexcept = default;

    const CellGrid& grid() const { return grid_; }
    AccessMode access_mode() const { return mode_; }
    int rank_count() const { return grid_.ranks(); }
    std::size_t molecule_count() const;

    /// Owning rank of a cell. Pure query, increments no counters.
    int affinity(int cell_id) const { return grid_.owner_of_cell(cell_id); }
    std::span<const int> owned_cells(int rank) const;

    /// Molecule count of a cell; metadata, uncounted.
    std::size_t cell_size(int cell_id) const;

    // --- element access path (pointer-to-shared analog, one scalar per call)
    double element_get(int rank, int cell_id, std::size_t slot, ScalarField field);
    void element_put(int rank, int cell_id, std::size_t slot, ScalarField field, double value);

    // --- local view (local-pointer analog, owner only, LocalView mode only)
    LocalCellView local_view(int rank, int cell_id);

    // --- bulk transfers (memget/memput analogs)
    PrefetchBuffer bulk_get(int rank, int cell_id);
    /// Adds each accumulated force to the matching slot (merge, not
    /// overwrite). Caller must hold the target cell's lock. Throws
    /// StalenessError if the cell's molecule count changed since the get.
    void bulk_put_forces(int rank, const PrefetchBuffer& buffer);

    /// Accounted record transfer used by migration: appends one batch of
    /// molecules to a destination cell. Caller must hold the destination
    /// lock. Counts one bulk transfer (position + velocity payload) when the
    /// destination is remote to `rank`.
    void append_batch(int rank, int cell_id, std::span<const Molecule> batch);

    // --- locking
    CellLockGuard lock_cell(int rank, int cell_id);
    CellLockGuard lock_cell_pair(int rank, int cell_a, int cell_b);

    // --- collectives
    void barrier();
    void barrier(Phase next);
    double all_reduce_sum(int rank, double partial);
    /// Release every rank waiting at a collective with an abort exception.
    void abort(const std::string& reason);
    bool aborted() const;

    // --- counters
    AccessCounters& counters(int rank) { return counters_[rank].value; }
    std::vector<AccessCounters> counters_by_rank() const;
    AccessCounters counters_total() const;
    void reset_counters();

    Phase phase() const;
    void set_phase(Phase p);

    /// Direct storage handle for tests and intra-partition bookkeeping;
    /// bypasses accounting.
    Cell& cell_storage(int cell_id);
    const Cell& cell_storage(int cell_id) const;

    /// All molecules gathered from the partitions, sorted by id. Unaccounted;
    /// meant for setup/teardown and verification.
    std::vector<Molecule> snapshot() const;

private:
    SharedSpace(const CellGrid& grid, AccessMode mode);

    struct alignas(64) PaddedCounters {
        AccessCounters value;
    };

    void check_rank(int rank) const;
    void check_cell(int cell_id) const;
    double* scalar_slot(int cell_id, std::size_t slot, ScalarField field);
    void count_element(int rank, int cell_id, bool write);

    CellGrid grid_;
    AccessMode mode_;
    std::vector<std::unique_ptr<Cell>> cells_;
    std::vector<std::vector<int>> owned_;
    std::vector<PaddedCounters> counters_;

    // collective state
    struct Collective {
        std::mutex m;
        std::condition_variable cv;
        int arrived = 0;
        std::uint64_t generation = 0;
        bool aborted = false;
        std::string abort_reason;
        std::vector<double> reduce_slots;
        std::atomic<Phase> phase{Phase::Setup};
    };
    std::unique_ptr<Collective> collective_;
};

/// Thrown internally when a collective is aborted by another rank.
class CollectiveAborted : public Error {
public:
    using Error::Error;
};

} // namespace pgasmd

#endif
