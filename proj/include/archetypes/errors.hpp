#pragma once

#include <stdexcept>
#include <string>

namespace archetypes {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad data: non-finite values, malformed CSV cells, missing columns,
// inconsistent dimensions at the API boundary.
struct InputError : Error {
    using Error::Error;
};

// Invalid configuration: k > n, empty column selection, unsupported k
// for an operation, too few scree entries for the elbow.
struct ConfigError : Error {
    using Error::Error;
};

// Optimization gave up: every restart failed inner-solver convergence.
struct ConvergenceError : Error {
    using Error::Error;
};

}  // namespace archetypes
