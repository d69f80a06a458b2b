#pragma once

#include <stdexcept>
#include <string>

namespace haulsim {

// Base class for everything this library throws on purpose. The CLI maps
// these to exit code 2 (bad input); anything else escaping is a bug (exit 1).
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input file. Message carries file name and line number.
struct ParseError : Error {
    using Error::Error;
};

// Input data that parsed fine but violates a precondition (negative speeds,
// non-monotonic timestamps, empty cycles).
struct ValidationError : Error {
    using Error::Error;
};

// Bad run configuration: unknown keys, inverted ranges, implausible settings.
struct ConfigError : Error {
    using Error::Error;
};

// Bad function argument or CLI usage.
struct ArgumentError : Error {
    using Error::Error;
};

}  // namespace haulsim
