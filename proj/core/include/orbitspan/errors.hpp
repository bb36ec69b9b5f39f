#pragma once

#include <stdexcept>
#include <string>

namespace orbitspan {

/// Malformed or out-of-contract input: bad file contents, violated
/// preconditions, invariant failures of user-supplied data. Maps to CLI
/// exit code 2.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace orbitspan
