#pragma once

/**
 * @file curve.hpp
 * @brief Curve equations: parsing, germs at points, reduction modulo p and
 *        projective plane curves over prime fields.
 */

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "curvesing/poly.hpp"

namespace curvesing {

/// Parses an expression in x and y over Q. Grammar:
///   expr  := term (('+' | '-') term)*
///   term  := unary (('*' | '/') unary)*      division only by nonzero constants
///   unary := ('+' | '-') unary | power
///   power := primary ('^' integer)?
///   primary := integer | 'x' | 'y' | '(' expr ')'
/// Throws SyntaxError (1-based column) or ZeroPolynomial.
BivarPoly parse_curve(std::string_view text);

/// gcd in k[x, y], normalized so that the leading coefficient is one.
BivarPoly bivariate_gcd(const BivarPoly& a, const BivarPoly& b);
bool is_squarefree(const BivarPoly& f);

/// Coefficientwise reduction. Throws BadDenominator or DegenerateReduction.
BivarPoly reduce_mod_p(const BivarPoly& f, std::uint32_t p);

/// A plane curve germ with its base point moved to the origin.
class CurveGerm {
public:
    /// Validates f != 0, squarefree, f(0,0) = 0.
    explicit CurveGerm(BivarPoly f);
    /// Germ of f at (a, b).
    static CurveGerm at(const BivarPoly& f, const FieldElem& a, const FieldElem& b);

    const BivarPoly& equation() const noexcept { return f_; }
    Field field() const noexcept { return f_.field(); }
    int multiplicity() const { return f_.order(); }

private:
    BivarPoly f_;
};

enum class ReductionStatus {
    Good,
    BadDenominator,
    DegenerateReduction,
    NotTotallyRational,
    BadProcess,
    BadSemigroup,
    WildFailure,
};

std::string to_string(ReductionStatus s);

struct ReductionReport {
    std::uint32_t prime = 0;
    ReductionStatus status = ReductionStatus::Good;
    std::string detail;
};

/// Normalized projective point: the first nonzero coordinate is 1.
struct ProjPoint {
    std::array<std::uint32_t, 3> c{};
    std::string to_string() const;
    friend auto operator<=>(const ProjPoint&, const ProjPoint&) = default;
};

struct HomogTerm {
    std::array<int, 3> e{};
    std::uint32_t coeff = 0;
};

enum class Chart { Z, Y, X };

struct SingularPoint {
    ProjPoint point;
    /// Affine chart used for the germ: z = 1, y = 1 or x = 1.
    Chart chart = Chart::Z;
    CurveGerm germ;
};

/// Projective plane curve F(x, y, z) = 0 over F_p, the homogenization of an
/// affine equation.
class GlobalCurve {
public:
    /// Throws NotSquarefree, BudgetExceeded.
    GlobalCurve(const BivarPoly& affine, std::uint64_t budget = 10'000'000);

    std::uint32_t q() const noexcept { return q_; }
    int degree() const noexcept { return deg_; }
    const std::vector<HomogTerm>& terms() const noexcept { return terms_; }
    const BivarPoly& affine() const noexcept { return affine_; }
    const std::vector<SingularPoint>& singular_points() const noexcept { return sing_; }

    /// Affine equation of the chart, centered at the given point.
    BivarPoly chart_equation(Chart c) const;

private:
    BivarPoly affine_;
    std::uint32_t q_;
    int deg_;
    std::vector<HomogTerm> terms_;
    std::vector<SingularPoint> sing_;
};

/// F_q-rational points where F and its three partials vanish, in lexicographic
/// order. Throws BudgetExceeded when q^2 * deg exceeds the budget.
std::vector<ProjPoint> find_singular_points(const std::vector<HomogTerm>& F, std::uint32_t q,
                                            std::uint64_t budget);

} // namespace curvesing
