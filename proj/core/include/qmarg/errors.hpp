#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qmarg {

// Base class for all errors thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Netlist / circuit text that does not conform to the grammar.
// line == 0 means the error is not tied to a specific line (e.g. missing
// output declarations detected at end of input).
struct ParseError : Error {
    ParseError(std::size_t line_number, const std::string& message)
        : Error(line_number == 0 ? message : "line " + std::to_string(line_number) + ": " + message),
          line(line_number) {}

    std::size_t line;
};

// Structurally invalid object or invalid operation parameters.
struct ValidationError : Error {
    using Error::Error;
};

// A configured resource cap (enumeration size, simulator width) was exceeded.
struct ResourceError : Error {
    using Error::Error;
};

} // namespace qmarg
