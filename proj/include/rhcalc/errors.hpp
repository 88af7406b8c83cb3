#pragma once

#include <stdexcept>
#include <string>

namespace rhcalc {

/// Malformed or out-of-contract user input. The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// An internal invariant failed; indicates a bug, never bad input.
class InvariantViolation : public std::logic_error {
public:
    explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace rhcalc
