// errors.hpp — Exception types shared across the polaronix modules

#pragma once

#include <stdexcept>
#include <string>

namespace polaronix {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid parameters or configuration (CLI exit code 2).
struct ConfigError : Error {
    using Error::Error;
};

// Adaptive quadrature failed to reach the requested tolerance (CLI exit code 3).
struct QuadratureError : Error {
    using Error::Error;
};

// Value requested off a uniform grid, or two grids that must coincide do not.
struct GridError : Error {
    using Error::Error;
};

struct LengthError : Error {
    using Error::Error;
};

// A file could not be read or written.
struct IoError : Error {
    using Error::Error;
};

} // namespace polaronix
