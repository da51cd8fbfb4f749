#pragma once
// Error types shared across the library.

#include <stdexcept>
#include <string>

namespace polysys {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an enumeration would exceed the configured size guard.
struct HomTooLarge : Error {
    explicit HomTooLarge(const std::string& what) : Error(what) {}
};

// Thrown when two pieces of data do not share the required interface shape
// (map composition, coalgebra morphisms, rewiring arities, ...).
struct InterfaceMismatch : Error {
    explicit InterfaceMismatch(const std::string& what) : Error(what) {}
};

// Thrown when a numeric computation produces a non-finite value.
struct NumericOverflow : Error {
    explicit NumericOverflow(const std::string& what) : Error(what) {}
};

// Thrown on malformed input files; carries a 1-based line number when known.
struct ParseError : Error {
    int line = 0;
    explicit ParseError(const std::string& what, int line_ = 0) : Error(what), line(line_) {}
};

} // namespace polysys
