#ifndef ORDSPEED_ERRORS_HPP
#define ORDSPEED_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ordspeed {

// Bad caller input (out-of-range vertex, malformed file, ...). CLI maps this
// to exit code 2.
struct InputError : std::invalid_argument {
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// A documented precondition of an operation was violated.
struct ContractViolation : std::logic_error {
    explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

// An internal invariant failed; always a bug, never a valid outcome.
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace ordspeed

#endif
