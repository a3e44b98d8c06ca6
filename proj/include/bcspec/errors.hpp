#pragma once

#include <stdexcept>
#include <string>

namespace bcspec {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct NotSquare : Error {
    using Error::Error;
};

// Thrown when an operation requires a commuting tuple; carries the worst
// relative commutator residual actually observed.
struct NotCommuting : Error {
    explicit NotCommuting(double residual)
        : Error("matrix tuple does not commute (max relative commutator residual " +
                std::to_string(residual) + ")"),
          max_residual(residual) {}
    double max_residual;
};

struct ZeroDivisor : Error {
    using Error::Error;
};

struct ZeroInput : Error {
    using Error::Error;
};

struct BadExponent : Error {
    using Error::Error;
};

struct NonFinite : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

}  // namespace bcspec
