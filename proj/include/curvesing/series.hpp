#pragma once

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "curvesing/field.hpp"
#include "curvesing/poly.hpp"

namespace curvesing {

/// Power series in t known modulo t^precision.
///
/// Binary operations keep the smaller precision of the operands; asking for a
/// coefficient at or beyond the precision throws PrecisionExhausted.
class TruncSeries {
public:
    TruncSeries(Field f, std::size_t precision);
    TruncSeries(Field f, std::vector<FieldElem> coeffs);

    static TruncSeries monomial(const FieldElem& c, std::size_t k, std::size_t precision);
    static TruncSeries constant(const FieldElem& c, std::size_t precision) {
        return monomial(c, 0, precision);
    }

    Field field() const noexcept { return field_; }
    std::size_t precision() const noexcept { return c_.size(); }
    const FieldElem& coeff(std::size_t k) const;
    std::span<const FieldElem> coefficients() const noexcept { return c_; }
    bool is_zero_to_precision() const;

    TruncSeries truncated(std::size_t precision) const;

    TruncSeries operator-() const;
    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator*(const FieldElem& c, const TruncSeries& a);

    /// Multiplicative inverse; requires a nonzero constant term.
    TruncSeries inverse() const;

    friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

private:
    Field field_;
    std::vector<FieldElem> c_;
};

/// The series vanishes modulo t^precision.
struct AbovePrecision {
    std::size_t precision = 0;
    friend bool operator==(const AbovePrecision&, const AbovePrecision&) = default;
};

using SeriesOrder = std::variant<std::size_t, AbovePrecision>;

SeriesOrder order_of_series(const TruncSeries& s);

/// f(x(t), y(t)) modulo t^min(prec x, prec y).
TruncSeries substitute(const BivarPoly& f, const TruncSeries& x, const TruncSeries& y);

} // namespace curvesing
