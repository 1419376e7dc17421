#pragma once

#include <stdexcept>

namespace ilifc {

// Parameter tuple violates a structural constraint (range, parity, size).
struct InvalidParamsError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Code length is too small for the requested bound to be defined.
struct LengthTooSmallError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A write was requested with data equal to the currently stored data.
struct SameDataError : std::logic_error {
    using std::logic_error::logic_error;
};

// Increment requested on a slice that is already at full weight.
struct FullSliceError : std::logic_error {
    using std::logic_error::logic_error;
};

// Increment requested with a bit index that does not match the slice.
struct IndexMismatchError : std::logic_error {
    using std::logic_error::logic_error;
};

// Mode change requested while every inversion cell is at its top level.
struct ExhaustedError : std::logic_error {
    using std::logic_error::logic_error;
};

// An active slice does not have a unique fill-run start position.
struct InvalidPatternError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Serialized state text is malformed or internally inconsistent.
struct DeserializeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Requested slice occupancy cannot be embedded in the given block.
struct UnrealizableOccupancyError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Exhaustive search was asked to cover more states than the caller allows.
struct StateSpaceTooLargeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace ilifc
