#ifndef MPTRI_ERROR_HPP
#define MPTRI_ERROR_HPP

#include <stdexcept>
#include <string>

namespace mptri {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Domain violation: zero polynomial where nonzero required, bad variable, etc.
struct MathError : Error {
    using Error::Error;
};

// divide_exact left a remainder; signals a logic bug upstream.
struct NonExactDivision : Error {
    using Error::Error;
};

struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos)
        : Error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

struct OracleFailure : Error {
    using Error::Error;
};

} // namespace mptri

#endif
