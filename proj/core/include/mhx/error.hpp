#pragma once

#include <stdexcept>
#include <string>

namespace mhx {

/// Base class of all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed or inconsistent input data (bad dimensions, violated
/// preconditions, unparsable text). Maps to CLI exit code 2.
class InputError : public Error {
public:
    using Error::Error;
};

/// A filtration pair (F, W) failed the bigrading axioms. Carries the first
/// axiom that broke so callers can report it.
class NotMixedHodgeError : public Error {
public:
    explicit NotMixedHodgeError(const std::string& witness)
        : Error("not a mixed Hodge structure: " + witness), witness_(witness) {}
    const std::string& witness() const { return witness_; }

private:
    std::string witness_;
};

/// An invariant the library itself guarantees was violated. Always a bug
/// (or inconsistent state that should be impossible). Maps to CLI exit 3.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace mhx
