#pragma once

#include <stdexcept>
#include <string>

namespace hls {

// A caller broke an operation's contract (mismatched orders, X beyond a table, ...).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An argument outside the mathematical domain (n = 0, unknown family id, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// The request cannot be satisfied with the available memory.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed or unreadable external data (CSV, binary cache).
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace hls
