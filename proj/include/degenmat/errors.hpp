#ifndef DEGENMAT_ERRORS_HPP
#define DEGENMAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace degenmat {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

// ring
struct NotDivisible : Error {
    explicit NotDivisible(const std::string& what) : Error("not divisible: " + what) {}
};
struct OrderMismatch : Error {
    explicit OrderMismatch(const std::string& what) : Error("series order mismatch: " + what) {}
};
struct NonUnitConstant : Error {
    NonUnitConstant() : Error("series constant term must be 1") {}
};

// numbers
struct BadParams : Error {
    explicit BadParams(const std::string& what) : Error("bad parameters: " + what) {}
};

// matrices
struct SizeMismatch : Error {
    explicit SizeMismatch(const std::string& what) : Error("matrix size mismatch: " + what) {}
};
struct NonUnitDiagonal : Error {
    NonUnitDiagonal() : Error("matrix inverse requires an all-ones diagonal") {}
};
struct ZeroDenominator : Error {
    explicit ZeroDenominator(const std::string& what) : Error("zero denominator: " + what) {}
};
struct BadShift : Error {
    explicit BadShift(const std::string& what) : Error("bad shift: " + what) {}
};

// ledger
struct UnknownIdentity : Error {
    explicit UnknownIdentity(const std::string& id) : Error("unknown identity: " + id) {}
};
struct DomainViolation : Error {
    explicit DomainViolation(const std::string& what) : Error("domain violation: " + what) {}
};

}  // namespace degenmat

#endif
