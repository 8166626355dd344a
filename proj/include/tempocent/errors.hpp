#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tempocent {

// Base class of every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Node id outside [0, n).
struct InvalidNodeError : Error {
    using Error::Error;
};

// Malformed input line; carries the 1-based line number.
struct ParseError : Error {
    ParseError(std::size_t line_no, const std::string& msg)
        : Error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
    std::size_t line;
};

// Matrix / registry dimension mismatch.
struct ShapeError : Error {
    using Error::Error;
};

// Iterative solver did not reach tolerance; carries the last residual.
struct ConvergenceError : Error {
    ConvergenceError(const std::string& msg, double last_residual)
        : Error(msg), residual(last_residual) {}
    double residual;
};

// Configurable resource cap exceeded (e.g. maximal-clique count).
struct ResourceLimitError : Error {
    using Error::Error;
};

// Invalid configuration value.
struct ConfigError : Error {
    using Error::Error;
};

// Event outside the configured slot range, or otherwise unusable.
struct IngestError : Error {
    using Error::Error;
};

}  // namespace tempocent
