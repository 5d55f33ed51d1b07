#pragma once

#include <stdexcept>
#include <string>

namespace beurling {

// Base for everything the library throws deliberately.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input text or JSON.
struct ParseError : Error {
    ParseError(const std::string& what, std::size_t offset = std::string::npos)
        : Error(what), offset(offset) {}
    std::size_t offset;
};

// A configured resource cap (ball size, group order, BFS nodes) was exceeded.
struct CapError : Error {
    using Error::Error;
};

// Operands belong to different alphabets / groups.
struct RankError : Error {
    using Error::Error;
};

// A stated precondition does not hold for the given input.
struct DomainError : Error {
    using Error::Error;
};

// An internal self-verification failed.  Certificate constructors check their
// own output by convolution before returning; this firing means a bug.
struct VerifyError : Error {
    using Error::Error;
};

} // namespace beurling
