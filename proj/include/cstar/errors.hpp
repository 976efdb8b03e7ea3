#pragma once

#include <stdexcept>
#include <string>

namespace cstar {

/// Malformed textual input (rationals, polynomials, derivations, JSON fields).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An operation was called outside its domain.
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Input is well formed but lies outside what the library can compute.
struct UnsupportedError : std::domain_error {
    using std::domain_error::domain_error;
};

}  // namespace cstar
