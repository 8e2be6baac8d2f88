#pragma once

/**
 * @file motivic.hpp
 * @brief Classes in Z[L, L^-1] and multivariate power series over them.
 *
 * Every class produced by this library comes from an arrangement of linear
 * subspaces, so a Laurent polynomial in the Lefschetz symbol L is a faithful
 * representation. Coefficients are 64-bit with overflow checks.
 */

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "curvesing/field.hpp"

namespace curvesing {

class MotClass {
public:
    MotClass() = default;
    /// The integer class n * 1.
    explicit MotClass(std::int64_t n);

    static MotClass L_power(int e);
    static MotClass lefschetz() { return L_power(1); }

    const std::map<int, std::int64_t>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::int64_t coeff(int e) const;
    int min_exponent() const;
    int max_exponent() const;

    MotClass operator-() const;
    MotClass& operator+=(const MotClass& o);
    MotClass& operator-=(const MotClass& o);
    friend MotClass operator+(MotClass a, const MotClass& b) { return a += b; }
    friend MotClass operator-(MotClass a, const MotClass& b) { return a -= b; }
    friend MotClass operator*(const MotClass& a, const MotClass& b);
    /// Multiply by L^e.
    MotClass shifted(int e) const;
    MotClass pow(unsigned e) const;

    /// Exact quotient; throws ExactDivisionFailure when the remainder is nonzero.
    MotClass exact_div(const MotClass& d) const;

    /// Counting specialization L -> q.
    Rational evaluate(std::int64_t q) const;

    /// Expanded, descending exponents: "L^6 - L^5", "2*L^3 - 1", "L^-2 - L^-3".
    std::string to_string() const;

    friend bool operator==(const MotClass&, const MotClass&) = default;

private:
    void add_term(int e, std::int64_t c);
    std::map<int, std::int64_t> terms_;
};

/// Power series in d variables with MotClass coefficients, truncated at total
/// degree `bound`. Absent exponents are zero.
class MotSeries {
public:
    using Exponent = std::vector<int>;

    MotSeries(int variables, int bound);

    int variables() const noexcept { return d_; }
    int bound() const noexcept { return bound_; }
    const std::map<Exponent, MotClass>& terms() const noexcept { return terms_; }

    MotClass coeff(const Exponent& n) const;
    /// Adds c to the coefficient at n; exponents beyond the bound are dropped.
    void add(const Exponent& n, const MotClass& c);

    /// Coefficientwise product with a class.
    MotSeries scaled(const MotClass& c) const;
    /// Z(t, ..., t): the one-variable series obtained by summing over |n|.
    MotSeries diagonal() const;

    friend bool operator==(const MotSeries&, const MotSeries&) = default;

private:
    int d_;
    int bound_;
    std::map<Exponent, MotClass> terms_;
};

int norm1(const std::vector<int>& n);

} // namespace curvesing
