#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <random>
#include <vector>

#include "curvesing/curve.hpp"
#include "curvesing/motivic.hpp"
#include "curvesing/series.hpp"

using namespace curvesing;

namespace {

const Field QQ = Field::rationals();

TruncSeries series(Field f, std::vector<long long> c) {
    std::vector<FieldElem> v;
    for (long long a : c) v.emplace_back(f, a);
    return TruncSeries(f, v);
}

// Dense integer polynomial product, truncated.
std::vector<long long> mul_trunc(const std::vector<long long>& a, const std::vector<long long>& b, std::size_t n) {
    std::vector<long long> out(n, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size() && i + j < n; ++j) out[i + j] += a[i] * b[j];
    return out;
}

MotClass random_class(std::mt19937& rng) {
    std::uniform_int_distribution<int> exp(-4, 4), coef(-5, 5), count(0, 4);
    MotClass c;
    for (int k = count(rng); k > 0; --k) c += MotClass(coef(rng)).shifted(exp(rng));
    return c;
}

BivarPoly random_poly(std::mt19937& rng, Field f) {
    std::uniform_int_distribution<int> e(0, 3), coef(-3, 3), count(1, 5);
    BivarPoly p(f);
    for (int k = count(rng); k > 0; --k) p += BivarPoly::monomial(FieldElem(f, coef(rng)), e(rng), e(rng));
    return p;
}

} // namespace

TEST_CASE("order of a series") {
    CHECK(std::get<std::size_t>(order_of_series(series(QQ, {0, 0, 0, 1, 0, 1, 0, 0, 0, 0}))) == 3);
    const TruncSeries zero(QQ, 10);
    CHECK(std::get<AbovePrecision>(order_of_series(zero)) == AbovePrecision{10});

    const TruncSeries x = series(QQ, {0, 0, 1, 0, 0, 0, 0, 0});
    const TruncSeries y = series(QQ, {0, 0, 0, 1, 0, 0, 0, 0});
    CHECK(std::get<std::size_t>(order_of_series(substitute(BivarPoly::var_y(QQ), x, y))) == 3);
}

TEST_CASE("substitution into a parametrization") {
    const BivarPoly cusp = parse_curve("y^2 - x^3");
    const TruncSeries x = series(QQ, {0, 0, 1, 0, 0, 0, 0, 0, 0, 0});
    const TruncSeries y = series(QQ, {0, 0, 0, 1, 0, 0, 0, 0, 0, 0});
    CHECK(substitute(cusp, x, y).is_zero_to_precision());

    const TruncSeries t = series(QQ, {0, 1, 0, 0});
    const TruncSeries zero(QQ, 4);
    CHECK(substitute(parse_curve("x + y"), t, zero) == series(QQ, {0, 1, 0, 0}));

    // y = t^3 + t^4 against a hand expansion of y^2 - x^3.
    const std::size_t n = 12;
    std::vector<long long> xs(n, 0), ys(n, 0);
    xs[2] = 1;
    ys[3] = ys[4] = 1;
    const auto y2 = mul_trunc(ys, ys, n);
    const auto x3 = mul_trunc(mul_trunc(xs, xs, n), xs, n);
    std::vector<long long> expect(n);
    for (std::size_t i = 0; i < n; ++i) expect[i] = y2[i] - x3[i];
    const TruncSeries got = substitute(cusp, series(QQ, xs), series(QQ, ys));
    CHECK(got == series(QQ, expect));
    CHECK(expect[7] == 2);
    CHECK(expect[8] == 1);
}

TEST_CASE("substitution refuses mixed fields") {
    const Field F5 = Field::prime(5);
    CHECK_THROWS_AS(substitute(parse_curve("x + y"), series(F5, {0, 1}), series(F5, {0, 0})), FieldMismatch);
}

TEST_CASE("counting specialization of classes") {
    CHECK((MotClass::lefschetz() - MotClass(1)).evaluate(3) == 2);
    CHECK(MotClass::L_power(-2).evaluate(2) == Rational(1, 4));

    const MotClass c = MotClass::L_power(6) - MotClass::L_power(5);
    CHECK(c.evaluate(2) == 32);
    // Oracle: F_2 combinations of the cusp's jet basis t^{0,2,3,...,7} modulo
    // t^8 with order exactly 2.
    const std::vector<int> basis{0, 2, 3, 4, 5, 6, 7};
    int count = 0;
    for (unsigned mask = 0; mask < (1u << basis.size()); ++mask) {
        unsigned bits = 0;
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (mask >> i & 1) bits ^= 1u << basis[i];
        if (bits != 0 && std::countr_zero(bits) == 2) ++count;
    }
    CHECK(count == 32);
}

TEST_CASE("class printing and exact division") {
    CHECK((MotClass::L_power(6) - MotClass::L_power(5)).to_string() == "L^6 - L^5");
    CHECK((MotClass::L_power(-1) - MotClass::L_power(-2)).to_string() == "L^-1 - L^-2");
    CHECK(MotClass().to_string() == "0");
    CHECK((MotClass(2).shifted(3) - MotClass(1)).to_string() == "2*L^3 - 1");

    const MotClass lm1 = MotClass::lefschetz() - MotClass(1);
    const MotClass f = MotClass::L_power(4) - MotClass(2).shifted(3) + MotClass::L_power(2);
    CHECK(f.exact_div(lm1) * lm1 == f);
    CHECK(f.exact_div(lm1) == MotClass::L_power(3) - MotClass::L_power(2));
    CHECK_THROWS_AS(MotClass::L_power(2).exact_div(lm1), ExactDivisionFailure);
}

TEST_CASE("ring axioms and specialization on random classes") {
    std::mt19937 rng(17);
    for (int it = 0; it < 200; ++it) {
        const MotClass a = random_class(rng), b = random_class(rng), c = random_class(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a - a == MotClass());
        for (std::int64_t q : {2, 3, 5}) {
            CHECK((a * b).evaluate(q) == a.evaluate(q) * b.evaluate(q));
            CHECK((a + b).evaluate(q) == a.evaluate(q) + b.evaluate(q));
        }
    }
}

TEST_CASE("orders add under multiplication") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> start(0, 5), coef(-4, 4);
    for (int it = 0; it < 100; ++it) {
        std::vector<long long> a(16, 0), b(16, 0);
        const int oa = start(rng), ob = start(rng);
        a[oa] = 1 + (it % 3);
        b[ob] = -1 - (it % 2);
        for (int i = oa + 1; i < 16; ++i) a[i] = coef(rng);
        for (int i = ob + 1; i < 16; ++i) b[i] = coef(rng);
        const auto prod = series(QQ, a) * series(QQ, b);
        CHECK(std::get<std::size_t>(order_of_series(prod)) == static_cast<std::size_t>(oa + ob));
    }
}

TEST_CASE("substitution is a ring homomorphism") {
    std::mt19937 rng(11);
    for (Field f : {QQ, Field::prime(3)}) {
        const TruncSeries x = series(f, {0, 1, 2, 0, 1, 0, 0, 0, 0, 0});
        const TruncSeries y = series(f, {0, 0, 1, 1, 0, 2, 0, 0, 0, 0});
        for (int it = 0; it < 50; ++it) {
            const BivarPoly a = random_poly(rng, f), b = random_poly(rng, f);
            CHECK(substitute(a * b, x, y) == substitute(a, x, y) * substitute(b, x, y));
            CHECK(substitute(a + b, x, y) == substitute(a, x, y) + substitute(b, x, y));
        }
    }
}

TEST_CASE("prime field elements") {
    const Field F7 = Field::prime(7);
    const FieldElem a(F7, -1);
    CHECK(a.residue() == 6);
    CHECK((a * a).is_one());
    CHECK(FieldElem(F7, 3).inverse() * FieldElem(F7, 3) == FieldElem::one(F7));
    CHECK(reduce_rational(Rational(1, 2), 7) == FieldElem(F7, 4));
    CHECK_THROWS_AS(reduce_rational(Rational(1, 7), 7), BadDenominator);
    CHECK_THROWS_AS(FieldElem(F7, 1) + FieldElem(Field::prime(5), 1), FieldMismatch);
}

TEST_CASE("series in several variables") {
    MotSeries s(2, 3);
    s.add({1, 1}, MotClass::lefschetz());
    s.add({2, 2}, MotClass(1));
    CHECK(s.coeff({2, 2}).is_zero());
    s.add({0, 2}, MotClass(3));
    const MotSeries diag = s.diagonal();
    CHECK(diag.coeff({2}) == MotClass::lefschetz() + MotClass(3));
}
