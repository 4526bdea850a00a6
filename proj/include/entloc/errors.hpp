#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace entloc {

// Violated precondition or type invariant on a library call.
struct contract_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Request exceeds an implementation cap (qubit counts, vertex counts, ...).
struct capability_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed external input; `offset` is the byte position that failed.
struct parse_error : std::runtime_error {
    std::size_t offset;
    parse_error(const std::string& what, std::size_t off)
        : std::runtime_error(what + " (byte " + std::to_string(off) + ")"), offset(off) {}
};

// Missing or exhausted input data (files, record streams).
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace entloc
