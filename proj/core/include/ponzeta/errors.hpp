#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ponzeta {

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

// Requested a diagonal (n-polynomial) form of an unbalanced operator.
struct NotDiagonal : std::domain_error {
    using std::domain_error::domain_error;
};

// A ladder action produced a state above the truncation cutoff.
// Never silently truncated: the caller must raise the cutoff.
struct CutoffOverflow : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotPrime : std::domain_error {
    using std::domain_error::domain_error;
};

// Parameters outside the convergence region (e.g. Re(s) <= 1).
struct DivergentParameters : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Prime bound P < truncation N, so not every index factors over the set.
struct PrimeBoundTooSmall : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct QuadratureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace ponzeta
