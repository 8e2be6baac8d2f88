#pragma once

/**
 * @file field.hpp
 * @brief Coefficient fields: the rationals and prime fields F_p.
 *
 * A FieldElem carries its field tag; mixing tags in arithmetic raises
 * FieldMismatch instead of silently coercing.
 */

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "curvesing/errors.hpp"

namespace curvesing {

using Rational = mpq_class;
using Integer = mpz_class;

std::string to_string(const Rational& r);

bool is_prime(std::uint64_t n);

class Field {
public:
    Field() = default;

    static Field rationals() { return Field{}; }
    /// Throws std::invalid_argument unless p is a prime below 2^31.
    static Field prime(std::uint32_t p);

    bool is_rational() const noexcept { return p_ == 0; }
    bool is_finite() const noexcept { return p_ != 0; }
    /// 0 for Q.
    std::uint32_t characteristic() const noexcept { return p_; }

    std::string to_string() const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    friend class FieldElem;
    explicit Field(std::uint32_t p) : p_(p) {}
    std::uint32_t p_ = 0;
};

/// Residue in [0, modulus) with prime modulus.
struct Residue {
    std::uint32_t value = 0;
    std::uint32_t modulus = 2;
    friend bool operator==(const Residue&, const Residue&) = default;
};

class FieldElem {
public:
    /// Zero of Q.
    FieldElem() : v_(Rational(0)) {}
    FieldElem(Field f, long long n);
    FieldElem(Field f, const Rational& r);
    explicit FieldElem(const Rational& r) : v_(r) { v_canonicalize(); }
    explicit FieldElem(Residue r);

    static FieldElem zero(Field f) { return FieldElem(f, 0); }
    static FieldElem one(Field f) { return FieldElem(f, 1); }

    Field field() const;
    bool is_zero() const;
    bool is_one() const;

    const Rational& rational() const;
    std::uint32_t residue() const;

    FieldElem operator-() const;
    FieldElem& operator+=(const FieldElem& o);
    FieldElem& operator-=(const FieldElem& o);
    FieldElem& operator*=(const FieldElem& o);
    FieldElem& operator/=(const FieldElem& o);

    friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
    friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
    friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
    friend FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }

    FieldElem inverse() const;
    FieldElem pow(unsigned long long e) const;

    friend bool operator==(const FieldElem& a, const FieldElem& b);

    /// Total order used only for deterministic enumeration: rationals by value,
    /// residues by representative in [0, p).
    friend bool canonical_less(const FieldElem& a, const FieldElem& b);

    /// "3/4", "-2" or the residue "5".
    std::string to_string() const;

private:
    void v_canonicalize();
    void check_same(const FieldElem& o) const;

    std::variant<Rational, Residue> v_;
};

/// Coefficientwise reduction of a rational number modulo p.
/// Throws BadDenominator when p divides the denominator.
FieldElem reduce_rational(const Rational& r, std::uint32_t p);

} // namespace curvesing
