#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace curvesing {

/// Base of every error raised by the library. The CLI maps subclasses to
/// exit codes, so keep the hierarchy flat.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands live over different coefficient fields.
class FieldMismatch : public Error {
public:
    using Error::Error;
};

class SyntaxError : public Error {
public:
    SyntaxError(std::size_t column, const std::string& what)
        : Error("syntax error at column " + std::to_string(column) + ": " + what),
          column_(column) {}

    /// 1-based column of the offending character.
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t column_;
};

class ZeroPolynomial : public Error {
public:
    ZeroPolynomial() : Error("polynomial is identically zero") {}
};

class BadDenominator : public Error {
public:
    explicit BadDenominator(std::uint32_t p)
        : Error("coefficient denominator divisible by " + std::to_string(p)), prime_(p) {}
    std::uint32_t prime() const noexcept { return prime_; }

private:
    std::uint32_t prime_;
};

/// Reduced curve is zero or acquires a repeated factor.
class DegenerateReduction : public Error {
public:
    using Error::Error;
};

class NotSquarefree : public Error {
public:
    using Error::Error;
};

class BudgetExceeded : public Error {
public:
    using Error::Error;
};

class NotTotallyRational : public Error {
public:
    using Error::Error;
};

class WildFailure : public Error {
public:
    using Error::Error;
};

/// Ring element vanishes identically on some branch.
class ZeroDivisor : public Error {
public:
    using Error::Error;
};

class NonStabilized : public Error {
public:
    using Error::Error;
};

class ExactDivisionFailure : public Error {
public:
    using Error::Error;
};

/// A truncated-series operation needed a coefficient beyond the known precision.
class PrecisionExhausted : public Error {
public:
    using Error::Error;
};

class InconsistentCounts : public Error {
public:
    using Error::Error;
};

class IndexMismatch : public Error {
public:
    using Error::Error;
};

} // namespace curvesing
