#pragma once

#include <stdexcept>
#include <string>

namespace witt {

// Malformed textual or JSON input.
class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Shape disagreement: matrix dimensions, multivector ranks, index ranges.
class dimension_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Value outside an operation's domain (singular matrix, non-idempotent mask,
// signature too large for the ambient rank, ...).
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

} // namespace witt
