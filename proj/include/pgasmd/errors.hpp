#ifndef PGASMD_ERRORS_HPP
#define PGASMD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pgasmd {

/// Base class for all engine errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid run parameters (zero dims, nonpositive density, ...).
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Lattice generation cannot satisfy the request (unphysical overlap, empty system).
class GenerationError : public Error {
public:
    using Error::Error;
};

/// Cell index or cell id outside the grid.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A position does not lie inside the periodic domain.
class ContainmentError : public Error {
public:
    using Error::Error;
};

/// Local view requested for a cell the rank does not own.
class AffinityError : public Error {
public:
    using Error::Error;
};

/// Local views are disabled in shared-only access mode.
class AccessModeError : public Error {
public:
    using Error::Error;
};

/// Bad molecule slot or field in an element access.
class AddressingError : public Error {
public:
    using Error::Error;
};

/// Bulk force merge against a cell whose molecule count changed.
class StalenessError : public Error {
public:
    using Error::Error;
};

/// Destination cell has no free slot for an incoming molecule.
class CapacityError : public Error {
public:
    using Error::Error;
};

/// A molecule would cross more than one cell layer in a single step.
class StabilityError : public Error {
public:
    using Error::Error;
};

/// Pair interaction at zero separation.
class SingularityError : public Error {
public:
    using Error::Error;
};

/// A collective run aborted; carries the step index at which it failed.
class SimulationError : public Error {
public:
    SimulationError(int step, const std::string& what)
        : Error("step " + std::to_string(step) + ": " + what), step_(step) {}
    int step() const { return step_; }

private:
    int step_;
};

} // namespace pgasmd

#endif
