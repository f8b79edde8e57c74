#pragma once

#include <stdexcept>
#include <string>

namespace lkh {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Incompatible shapes, invalid subsystem sets, invalid permutations.
struct ShapeError : Error {
    using Error::Error;
};

// Input fails the Hermitian-deviation bound of the eigensolver.
struct NonHermitianError : Error {
    using Error::Error;
};

// Jacobi sweeps exceeded the cap without reaching the off-diagonal target.
struct NonConvergenceError : Error {
    using Error::Error;
};

// Spectrum too close to singular for the requested matrix function or check.
struct IllConditionedError : Error {
    using Error::Error;
};

// Eigenvalue outside the domain of the requested function (beyond clamp).
struct DomainError : Error {
    using Error::Error;
};

// Epsilon above the sufficiency threshold of the perturbation bound.
struct EpsilonTooLargeError : Error {
    using Error::Error;
};

// Purification ancilla smaller than the numerical rank of the state.
struct AncillaTooSmallError : Error {
    using Error::Error;
};

// File read/write problems in the CLI layer.
struct IoError : Error {
    using Error::Error;
};

// Bad user-facing configuration (flags, dimensions, suite names).
struct UsageError : Error {
    using Error::Error;
};

}  // namespace lkh
