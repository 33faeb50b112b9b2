#ifndef QSCHUR_ERRORS_HPP
#define QSCHUR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qschur {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Division that was expected to be exact is not.
struct NotDivisible : Error {
    explicit NotDivisible(const std::string& msg) : Error("not divisible: " + msg) {}
};

// Arithmetic between polynomials over different ring signatures.
struct RingMismatch : Error {
    explicit RingMismatch(const std::string& msg) : Error("ring mismatch: " + msg) {}
};

// Operator composition or application with incompatible boundaries.
struct BoundaryMismatch : Error {
    explicit BoundaryMismatch(const std::string& msg) : Error("boundary mismatch: " + msg) {}
};

// Input fails the invariance required by an operator's domain.
struct InvarianceViolation : Error {
    explicit InvarianceViolation(const std::string& msg) : Error("invariance violation: " + msg) {}
};

struct ParseError : Error {
    size_t position;
    ParseError(const std::string& msg, size_t pos)
        : Error("parse error at " + std::to_string(pos) + ": " + msg), position(pos) {}
};

} // namespace qschur

#endif
