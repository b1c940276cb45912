#pragma once

#include <stdexcept>
#include <string>

namespace hoffman {

// Base class for everything this library throws on contract violations,
// malformed inputs and solver failures.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input file or string (graph6, DIMACS, edge lists, certificates).
struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

// A size/scale cap of an exact oracle was exceeded.
struct CapExceeded : Error {
    explicit CapExceeded(const std::string& what) : Error(what) {}
};

} // namespace hoffman
