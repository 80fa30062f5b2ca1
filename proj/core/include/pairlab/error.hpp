#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pairlab {

/// Malformed or out-of-domain input. The CLI maps this to exit code 3.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Syntax error in polynomial or rational text; `position` is a 0-based
/// byte offset into the input.
class ParseError : public InputError {
public:
    ParseError(const std::string& what, std::size_t position)
        : InputError(what + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// An invariant computation was handed the zero polynomial.
class ZeroPolynomialError : public InputError {
public:
    ZeroPolynomialError() : InputError("zero polynomial has no singularity invariants") {}
};

/// f(0) != 0: the divisor does not pass through the origin.
class UnitAtOriginError : public InputError {
public:
    UnitAtOriginError()
        : InputError("unit at origin: threshold undefined (+inf)") {}
};

/// Internal consistency check failed. The CLI maps this to exit code 4.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace pairlab
