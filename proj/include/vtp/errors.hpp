#pragma once

#include <stdexcept>

namespace vtp {

// Bad input from the caller: unknown ids, malformed vectors, out of range options.
struct UserError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A computed object broke one of its own invariants.
struct InvariantError : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace vtp
