#pragma once

#include <stdexcept>
#include <string>

namespace pblab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidArgument : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

// Steady-state solve failed or the null space of the Liouvillian is degenerate.
struct SingularSystem : Error {
    using Error::Error;
};

// The solved state violates positivity beyond tolerance.
struct UnphysicalState : Error {
    using Error::Error;
};

// Mean photon number too small for a normalized correlation function.
struct VacuumState : Error {
    using Error::Error;
};

// A perturbative denominator vanished (kappa = gamma = 0 exactly on resonance).
struct DegenerateDenominator : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

}  // namespace pblab
