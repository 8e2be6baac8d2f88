#pragma once

/**
 * @file poly.hpp
 * @brief Sparse bivariate polynomials and dense univariate polynomials over a
 *        Field.
 */

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "curvesing/field.hpp"

namespace curvesing {

struct Monomial {
    int x = 0;
    int y = 0;
    int degree() const noexcept { return x + y; }
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// f = sum c_(a,b) x^a y^b with no stored zero coefficients.
class BivarPoly {
public:
    using TermMap = std::map<Monomial, FieldElem>;

    explicit BivarPoly(Field f = Field::rationals()) : field_(f) {}

    static BivarPoly constant(const FieldElem& c);
    static BivarPoly var_x(Field f);
    static BivarPoly var_y(Field f);
    static BivarPoly monomial(const FieldElem& c, int a, int b);

    Field field() const noexcept { return field_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }

    FieldElem coeff(int a, int b) const;
    void add_term(Monomial m, const FieldElem& c);

    /// -1 for the zero polynomial.
    int total_degree() const;
    int degree_x() const;
    int degree_y() const;
    /// Lowest total degree of a term: the multiplicity at the origin. -1 for zero.
    int order() const;
    BivarPoly homogeneous_part(int k) const;

    BivarPoly operator-() const;
    BivarPoly& operator+=(const BivarPoly& o);
    BivarPoly& operator-=(const BivarPoly& o);
    friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
    friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
    friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
    friend BivarPoly operator*(const FieldElem& c, const BivarPoly& a);
    BivarPoly pow(unsigned e) const;

    BivarPoly dx() const;
    BivarPoly dy() const;

    FieldElem evaluate(const FieldElem& x, const FieldElem& y) const;
    /// f(x + a, y + b)
    BivarPoly translate(const FieldElem& a, const FieldElem& b) const;
    BivarPoly swap_xy() const;

    /// Strict transforms under the two standard blow-up charts, for a
    /// polynomial of order >= m:
    ///   chart 1: f(x, x*y) / x^m,   chart 2: f(x*y, y) / y^m.
    BivarPoly chart1_strict(int m) const;
    BivarPoly chart2_strict(int m) const;

    /// Terms in ascending total degree, higher y-power first within a degree,
    /// e.g. "y^2 - x^2 - x^3". Parses back to the same polynomial.
    std::string to_string() const;

    friend bool operator==(const BivarPoly& a, const BivarPoly& b) {
        return a.field_ == b.field_ && a.terms_ == b.terms_;
    }

private:
    void check_same(const BivarPoly& o) const;

    Field field_;
    TermMap terms_;
};

/// Dense univariate polynomial, coefficients from low to high degree,
/// no trailing zeros.
class UPoly {
public:
    explicit UPoly(Field f = Field::rationals()) : field_(f) {}
    UPoly(Field f, std::vector<FieldElem> coeffs);

    static UPoly constant(const FieldElem& c);
    static UPoly linear(const FieldElem& c0, const FieldElem& c1);

    Field field() const noexcept { return field_; }
    /// -1 for zero.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    const std::vector<FieldElem>& coefficients() const noexcept { return c_; }
    FieldElem coeff(int k) const;
    const FieldElem& leading() const;

    UPoly operator-() const;
    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const FieldElem& c, const UPoly& a);

    /// Euclidean division; throws std::domain_error on division by zero.
    std::pair<UPoly, UPoly> divmod(const UPoly& d) const;
    UPoly monic() const;
    UPoly derivative() const;
    FieldElem evaluate(const FieldElem& x) const;

    friend bool operator==(const UPoly&, const UPoly&) = default;

private:
    void trim();
    Field field_;
    std::vector<FieldElem> c_;
};

UPoly gcd(UPoly a, UPoly b);

struct Root {
    FieldElem value;
    int multiplicity = 0;
};

/// All roots lying in the ground field, with multiplicities, in canonical
/// order. Over Q by the rational-root test, over F_p exhaustively.
std::vector<Root> ground_field_roots(const UPoly& u);

} // namespace curvesing
