#include "curvesing/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace curvesing {

TruncSeries::TruncSeries(Field f, std::size_t precision) : field_(f), c_(precision, FieldElem::zero(f)) {
    if (precision == 0) throw std::invalid_argument("series precision must be positive");
}

TruncSeries::TruncSeries(Field f, std::vector<FieldElem> coeffs) : field_(f), c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("series precision must be positive");
    for (const auto& c : c_)
        if (!(c.field() == field_)) throw FieldMismatch("series coefficient field");
}

TruncSeries TruncSeries::monomial(const FieldElem& c, std::size_t k, std::size_t precision) {
    TruncSeries s(c.field(), precision);
    if (k < precision) s.c_[k] = c;
    return s;
}

const FieldElem& TruncSeries::coeff(std::size_t k) const {
    if (k >= c_.size())
        throw PrecisionExhausted("coefficient t^" + std::to_string(k) + " requested at precision " +
                                 std::to_string(c_.size()));
    return c_[k];
}

bool TruncSeries::is_zero_to_precision() const {
    return std::all_of(c_.begin(), c_.end(), [](const FieldElem& c) { return c.is_zero(); });
}

TruncSeries TruncSeries::truncated(std::size_t precision) const {
    if (precision > c_.size())
        throw PrecisionExhausted("cannot raise precision from " + std::to_string(c_.size()) + " to " +
                                 std::to_string(precision));
    return TruncSeries(field_, std::vector<FieldElem>(c_.begin(), c_.begin() + precision));
}

TruncSeries TruncSeries::operator-() const {
    TruncSeries r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    if (!(a.field_ == b.field_)) throw FieldMismatch("series fields differ");
    const std::size_t n = std::min(a.precision(), b.precision());
    std::vector<FieldElem> out(a.c_.begin(), a.c_.begin() + n);
    for (std::size_t i = 0; i < n; ++i) out[i] += b.c_[i];
    return TruncSeries(a.field_, std::move(out));
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) { return a + (-b); }

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    if (!(a.field_ == b.field_)) throw FieldMismatch("series fields differ");
    const std::size_t n = std::min(a.precision(), b.precision());
    TruncSeries r(a.field_, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < n; ++j) {
            if (b.c_[j].is_zero()) continue;
            r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return r;
}

TruncSeries operator*(const FieldElem& c, const TruncSeries& a) {
    TruncSeries r = a;
    for (auto& x : r.c_) x *= c;
    return r;
}

TruncSeries TruncSeries::inverse() const {
    if (c_[0].is_zero()) throw std::domain_error("series inverse needs a unit constant term");
    const std::size_t n = c_.size();
    const FieldElem inv0 = c_[0].inverse();
    TruncSeries r(field_, n);
    r.c_[0] = inv0;
    for (std::size_t k = 1; k < n; ++k) {
        FieldElem acc = FieldElem::zero(field_);
        for (std::size_t j = 1; j <= k; ++j)
            if (!c_[j].is_zero()) acc += c_[j] * r.c_[k - j];
        r.c_[k] = -acc * inv0;
    }
    return r;
}

SeriesOrder order_of_series(const TruncSeries& s) {
    for (std::size_t k = 0; k < s.precision(); ++k)
        if (!s.coeff(k).is_zero()) return k;
    return AbovePrecision{s.precision()};
}

TruncSeries substitute(const BivarPoly& f, const TruncSeries& x, const TruncSeries& y) {
    if (!(f.field() == x.field()) || !(f.field() == y.field()))
        throw FieldMismatch("substitute: polynomial over " + f.field().to_string() + ", branch over " +
                            x.field().to_string());
    const std::size_t n = std::min(x.precision(), y.precision());
    const Field k = f.field();
    if (f.is_zero()) return TruncSeries(k, n);

    std::vector<TruncSeries> xp{TruncSeries::constant(FieldElem::one(k), n)};
    for (int a = 1; a <= f.degree_x(); ++a) xp.push_back(xp.back() * x);
    std::vector<TruncSeries> yp{TruncSeries::constant(FieldElem::one(k), n)};
    for (int b = 1; b <= f.degree_y(); ++b) yp.push_back(yp.back() * y);

    TruncSeries acc(k, n);
    for (const auto& [m, c] : f.terms()) acc = acc + c * (xp[m.x] * yp[m.y]);
    return acc;
}

} // namespace curvesing
