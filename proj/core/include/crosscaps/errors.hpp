#ifndef CROSSCAPS_ERRORS_HPP
#define CROSSCAPS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace crosscaps {

// Malformed or inconsistent input (bad dimensions, violated type invariants,
// unknown ids).  The CLI maps this to exit code 2.
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& msg) : std::invalid_argument(msg) {}
};

// A computation that started from valid input could not produce a trustworthy
// answer (aliasing, no spectral gap, inconsistent samples).  Exit code 1.
class ComputeError : public std::runtime_error {
public:
    explicit ComputeError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace crosscaps

#endif
