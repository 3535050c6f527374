#ifndef HESSREG_ERRORS_HPP
#define HESSREG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hessreg {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// File could not be opened / read / written.
class IoError : public Error {
public:
    using Error::Error;
};

// File contents do not match the expected layout (bad magic, truncation,
// unsupported dtype, malformed sidecar, ...).
class FormatError : public Error {
public:
    using Error::Error;
};

// Grid geometry is unusable: dims too small, non-positive spacing,
// mismatched grids, oblique orientation.
class GeometryError : public Error {
public:
    using Error::Error;
};

// An argument is outside its documented domain.
class ParameterError : public Error {
public:
    using Error::Error;
};

// Values are structurally invalid (non-finite data, landmark count mismatch).
class DataError : public Error {
public:
    using Error::Error;
};

// Registration preprocessing could not produce a usable sample set.
class PreprocessError : public Error {
public:
    using Error::Error;
};

// The optimizer could not make progress (e.g. no finite cost anywhere).
class OptimizationError : public Error {
public:
    using Error::Error;
};

} // namespace hessreg

#endif
