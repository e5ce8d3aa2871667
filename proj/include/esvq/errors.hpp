#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace esvq {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// 64-bit index arithmetic left the representable range.
struct OverflowError : Error {
    using Error::Error;
};

// Generator index parity violates the family convention
// (L/M/N carry integer indices, Y carries half-odd-integer indices).
struct ParityError : Error {
    using Error::Error;
};

// Arithmetic was attempted between series with different truncation orders.
struct OrderMismatch : Error {
    using Error::Error;
};

// Tensor operands have different numbers of slots.
struct ArityMismatch : Error {
    using Error::Error;
};

// Invalid configuration (bad deformation parameter, negative order, ...).
struct ConfigError : Error {
    using Error::Error;
};

// Expression syntax error; `offset` is the byte position in the input.
struct ParseError : Error {
    std::size_t offset;
    ParseError(std::size_t off, const std::string& what)
        : Error(what + " (at byte " + std::to_string(off) + ")"), offset(off) {}
};

} // namespace esvq
