#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>

#include "curvesing/curve.hpp"

using namespace curvesing;

namespace {

using Form = std::function<long(long, long, long)>;

// Points of P^2(F_q) where F and the three partials vanish, first nonzero
// coordinate normalized to 1.
std::vector<ProjPoint> jacobian_oracle(long q, const std::vector<Form>& forms) {
    std::vector<ProjPoint> out;
    auto vanish = [&](long a, long b, long c) {
        for (const auto& f : forms)
            if (((f(a, b, c) % q) + q) % q != 0) return false;
        return true;
    };
    for (long a = 0; a < q; ++a)
        for (long b = 0; b < q; ++b)
            for (long c = 0; c < q; ++c) {
                const long first = a != 0 ? a : b != 0 ? b : c;
                if (first != 1) continue;
                if (vanish(a, b, c))
                    out.push_back(ProjPoint{{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b),
                                             static_cast<std::uint32_t>(c)}});
            }
    return out;
}

std::vector<ProjPoint> singular_points(const char* text, std::uint32_t p) {
    const GlobalCurve X(reduce_mod_p(parse_curve(text), p));
    std::vector<ProjPoint> out;
    for (const auto& s : X.singular_points()) out.push_back(s.point);
    return out;
}

} // namespace

TEST_CASE("parsing") {
    const BivarPoly f = parse_curve("y^2 - x^3");
    CHECK(f.term_count() == 2);
    CHECK(f.coeff(0, 2) == FieldElem(Rational(1)));
    CHECK(f.coeff(3, 0) == FieldElem(Rational(-1)));

    CHECK(parse_curve("(y-x)*(y+x) - x^3") == parse_curve("y^2 - x^2 - x^3"));
    CHECK(parse_curve("x/2 + 3/4*y") == parse_curve("(2*x + 3*y)/4"));

    try {
        parse_curve("y^^2");
        FAIL("expected a syntax error");
    } catch (const SyntaxError& e) {
        CHECK(e.column() == 3);
    }
    CHECK_THROWS_AS(parse_curve("x - x"), ZeroPolynomial);
    CHECK_THROWS_AS(parse_curve("x +"), SyntaxError);
    CHECK_THROWS_AS(parse_curve("x / y"), SyntaxError);
    CHECK_THROWS_AS(parse_curve("x / 0"), SyntaxError);
    CHECK_THROWS_AS(parse_curve("(x + y"), SyntaxError);
    CHECK_THROWS_AS(parse_curve("z"), SyntaxError);
}

TEST_CASE("printing parses back") {
    for (const char* text : {"y^2 - x^3", "x*y", "y - x^2", "(y-x)*(y+x) - x^3", "y^3 - x^7 + 1/3*x^2*y^2",
                             "-x + 2*y - x^5*y^5"}) {
        const BivarPoly f = parse_curve(text);
        CHECK(parse_curve(f.to_string()) == f);
    }
}

TEST_CASE("reduction modulo p") {
    const BivarPoly r = reduce_mod_p(parse_curve("y^2 - x^3 - x^2"), 5);
    CHECK(r.field() == Field::prime(5));
    CHECK(r.coeff(2, 0).residue() == 4);

    CHECK_THROWS_AS(reduce_mod_p(parse_curve("1/2*x^2 + y"), 2), BadDenominator);
    const BivarPoly c = reduce_mod_p(parse_curve("y^2 - x^3"), 7);
    CHECK(c.coeff(3, 0).residue() == 6);
    CHECK(c.coeff(0, 2).residue() == 1);

    CHECK_THROWS_AS(reduce_mod_p(parse_curve("3*x"), 3), DegenerateReduction);
    CHECK_THROWS_AS(reduce_mod_p(parse_curve("y^2 - x^4"), 2), DegenerateReduction);
}

TEST_CASE("reduction commutes with products at good primes") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> e(0, 3), coef(-6, 6);
    for (int it = 0; it < 40; ++it) {
        BivarPoly a(Field::rationals()), b(Field::rationals());
        for (int k = 0; k < 3; ++k) {
            a += BivarPoly::monomial(FieldElem(Rational(coef(rng))), e(rng), e(rng));
            b += BivarPoly::monomial(FieldElem(Rational(coef(rng))), e(rng), e(rng));
        }
        a += BivarPoly::monomial(FieldElem(Rational(1)), 1, 0);
        b += BivarPoly::monomial(FieldElem(Rational(1)), 0, 1);
        for (std::uint32_t p : {5u, 7u, 11u}) {
            const BivarPoly ab = a * b;
            if (!is_squarefree(ab)) continue;
            BivarPoly ra(Field::prime(p)), rb(Field::prime(p)), rab(Field::prime(p));
            try {
                ra = reduce_mod_p(a, p);
                rb = reduce_mod_p(b, p);
                rab = reduce_mod_p(ab, p);
            } catch (const DegenerateReduction&) {
                continue;
            }
            CHECK(rab == ra * rb);
        }
    }
}

TEST_CASE("squarefree test") {
    CHECK(is_squarefree(parse_curve("y^2 - x^3")));
    CHECK_FALSE(is_squarefree(parse_curve("(y - x^2)^2")));
    CHECK_FALSE(is_squarefree(parse_curve("(x + y)^2 * (x - y)")));
    CHECK(is_squarefree(parse_curve("x*y*(x + y)")));
    CHECK_THROWS_AS(CurveGerm(parse_curve("(y - x)^2")), NotSquarefree);
}

TEST_CASE("germs at points") {
    const BivarPoly f = parse_curve("y^2 - x^3 - x^2");
    const CurveGerm at_origin(f);
    CHECK(at_origin.multiplicity() == 2);
    const CurveGerm smooth = CurveGerm::at(f, FieldElem(Rational(-1)), FieldElem(Rational(0)));
    CHECK(smooth.multiplicity() == 1);
    CHECK(smooth.equation().evaluate(FieldElem(Rational(0)), FieldElem(Rational(0))).is_zero());
    CHECK_THROWS(CurveGerm(parse_curve("y^2 - x^3 + 1")));
}

TEST_CASE("singular points of projective curves") {
    // z y^2 = x^3 + x^2 z over F_3.
    const std::vector<ProjPoint> nodal = jacobian_oracle(
        3, {[](long x, long y, long z) { return z * y * y - x * x * x - x * x * z; },
            [](long x, long, long z) { return -3 * x * x - 2 * x * z; },
            [](long, long y, long z) { return 2 * z * y; },
            [](long x, long y, long) { return y * y - x * x; }});
    CHECK(nodal == std::vector<ProjPoint>{ProjPoint{{0, 0, 1}}});
    CHECK(singular_points("y^2 - x^3 - x^2", 3) == nodal);

    const std::vector<ProjPoint> conic = jacobian_oracle(
        5, {[](long x, long y, long z) { return x * x + y * y - z * z; },
            [](long x, long, long) { return 2 * x; },
            [](long, long y, long) { return 2 * y; },
            [](long, long, long z) { return -2 * z; }});
    CHECK(conic.empty());
    CHECK(singular_points("x^2 + y^2 - 1", 5).empty());

    const std::vector<ProjPoint> cusp = jacobian_oracle(
        2, {[](long x, long y, long z) { return z * y * y - x * x * x; },
            [](long x, long, long) { return -3 * x * x; },
            [](long, long y, long z) { return 2 * z * y; },
            [](long, long y, long) { return y * y; }});
    CHECK(cusp == std::vector<ProjPoint>{ProjPoint{{0, 0, 1}}});
    CHECK(singular_points("y^2 - x^3", 2) == cusp);
}

TEST_CASE("singular points at infinity use another chart") {
    // y = x^3 has a cusp at (0:1:0).
    const GlobalCurve X(reduce_mod_p(parse_curve("y - x^3"), 5));
    REQUIRE(X.singular_points().size() == 1);
    const SingularPoint& s = X.singular_points().front();
    CHECK(s.point == ProjPoint{{0, 1, 0}});
    CHECK(s.chart == Chart::Y);
    CHECK(s.germ.multiplicity() >= 2);
    CHECK(s.point.to_string() == "(0:1:0)");
}

TEST_CASE("every listed singular point has multiplicity at least two") {
    for (const char* text : {"y^2 - x^3 - x^2", "y^2 - x^3", "y^2 - x^2*y", "y^2 - x^5 - x^4"})
        for (std::uint32_t p : {3u, 5u, 7u}) {
            const GlobalCurve X(reduce_mod_p(parse_curve(text), p));
            for (const auto& s : X.singular_points()) CHECK(s.germ.multiplicity() >= 2);
        }
}

TEST_CASE("enumeration budget") {
    const BivarPoly f = reduce_mod_p(parse_curve("y^2 - x^3"), 31);
    CHECK_THROWS_AS(GlobalCurve(f, 100), BudgetExceeded);
}
