#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "curvesing/curve.hpp"
#include "curvesing/zeta_global.hpp"

using namespace curvesing;

namespace {

GlobalCurve curve(const char* text, std::uint32_t p) { return GlobalCurve(reduce_mod_p(parse_curve(text), p)); }

// Affine solutions of y^2 = x^3 + x + 1 over F_5 plus the point at infinity.
long elliptic_count_f5() {
    long n = 1;
    for (long x = 0; x < 5; ++x)
        for (long y = 0; y < 5; ++y)
            if ((y * y - x * x * x - x - 1) % 5 == 0) ++n;
    return n;
}

} // namespace

TEST_CASE("point counts") {
    const GlobalCurve nodal = curve("y^2 - x^3 - x^2", 3);
    const PointCounts pn = count_points(nodal, 4);
    CHECK(pn.N[0] == 3);
    CHECK(pn.N_smooth[0] == 4);
    for (int m = 1; m <= 4; ++m) {
        std::uint64_t qm = 1;
        for (int i = 0; i < m; ++i) qm *= 3;
        CHECK(pn.N_smooth[m - 1] == qm + 1);
    }

    const GlobalCurve cusp = curve("y^2 - x^3", 2);
    const PointCounts pc = count_points(cusp, 3);
    CHECK(pc.N_smooth == pc.N);

    const GlobalCurve conic = curve("x^2 + y^2 - 1", 5);
    const PointCounts po = count_points(conic, 3);
    CHECK(po.N_smooth == po.N);
    CHECK(po.N == std::vector<std::uint64_t>{6, 26, 126});
}

TEST_CASE("parallel and serial point counts agree") {
    const GlobalCurve X = curve("y^2 - x^3 - x - 1", 5);
    const PointCounts a = count_points(X, 3);
    const PointCounts b = count_points_serial(X, 3);
    CHECK(a.N == b.N);
    CHECK(a.N_smooth == b.N_smooth);
    CHECK(count_points_over(X, 2, true) == count_points_over(X, 2, false));
}

TEST_CASE("point count budget") {
    CHECK_THROWS_AS(count_points(curve("y^2 - x^3", 5), 6, 1000), BudgetExceeded);
}

TEST_CASE("Weil zeta of the smooth model") {
    const WeilZeta nodal = weil_zeta_smooth(count_points(curve("y^2 - x^3 - x^2", 3), 2), 0);
    CHECK(nodal.numerator == std::vector<Integer>{1});

    const WeilZeta cusp = weil_zeta_smooth(count_points(curve("y^2 - x^3", 5), 2), 0);
    CHECK(cusp.numerator == std::vector<Integer>{1});

    const long a = elliptic_count_f5();
    const WeilZeta ell = weil_zeta_smooth(count_points(curve("y^2 - x^3 - x - 1", 5), 3), 1);
    CHECK(ell.numerator == std::vector<Integer>{1, a - 6, 5});
}

TEST_CASE("inconsistent genus is detected") {
    CHECK_THROWS_AS(weil_zeta_smooth(count_points(curve("y^2 - x^3 - x - 1", 5), 3), 0), InconsistentCounts);
}

TEST_CASE("closed point tallies invert the counts") {
    const PointCounts pc = count_points(curve("y^2 - x^3 - x - 1", 5), 4);
    const auto a = closed_point_tallies(pc.N_smooth);
    for (std::size_t m = 1; m <= pc.N_smooth.size(); ++m) {
        Integer sum = 0;
        for (std::size_t k = 1; k <= m; ++k)
            if (m % k == 0) sum += Integer(static_cast<unsigned long>(k)) * a[k];
        CHECK(sum == Integer(static_cast<unsigned long>(pc.N_smooth[m - 1])));
    }
}

TEST_CASE("divisor zeta") {
    const GlobalCurve nodal = curve("y^2 - x^3 - x^2", 3);
    const auto sing = singular_data(nodal, 6);
    const PointCounts pc = count_points(nodal, 6);
    const auto z = divisor_zeta(nodal, sing, pc, 6, LocalSource::Oracle);
    CHECK(z[0] == 1);
    CHECK(z[1] == 2);
    CHECK(divisor_zeta(nodal, sing, pc, 6, LocalSource::Formula) == z);

    const GlobalCurve conic = curve("x^2 + y^2 - 1", 5);
    const auto zc = divisor_zeta(conic, {}, count_points(conic, 5), 5, LocalSource::Formula);
    Rational expect = 0, pw = 1;
    for (int k = 0; k <= 5; ++k, pw *= 5) {
        expect += pw;
        CHECK(zc[k] == expect);
    }
}

TEST_CASE("global factorization") {
    for (const auto& [text, p] : std::vector<std::pair<std::string, std::uint32_t>>{
             {"y^2 - x^3 - x^2", 3}, {"y^2 - x^3", 2}, {"x^2 + y^2 - 1", 5}, {"y^2 - x^3 - x - 1", 5},
             {"y^2 - x^3", 3}}) {
        CAPTURE(text);
        CAPTURE(p);
        const FactorizationReport r = verify_global_factorization(curve(text.c_str(), p), 6, 300'000'000);
        CHECK(r.equal);
        CHECK_FALSE(r.first_mismatch.has_value());
        CHECK(r.unit_index_form);
        CHECK(r.left.size() == 7);
    }
}

TEST_CASE("non-rational singular points are rejected") {
    CHECK_THROWS_AS(verify_global_factorization(curve("y^2 - x^2*y - x^4", 3), 4), NotTotallyRational);
}

TEST_CASE("reducible curves are rejected") {
    CHECK_THROWS_AS(verify_global_factorization(curve("x*y", 3), 4), InconsistentCounts);
}

TEST_CASE("unit index") {
    const UnitIndex node = unit_index(CurveGerm(reduce_mod_p(parse_curve("x*y"), 3)));
    CHECK(node.formula == 2);
    CHECK(node.direct == 2);
    const UnitIndex cusp = unit_index(CurveGerm(reduce_mod_p(parse_curve("y^2 - x^3"), 2)));
    CHECK(cusp.formula == 2);
    CHECK(cusp.direct == 2);
    for (std::uint32_t q : {2u, 3u})
        for (const char* text : {"y^2 - x^3", "x*y", "y^2 - x^2*y"}) {
            const UnitIndex u = unit_index(CurveGerm(reduce_mod_p(parse_curve(text), q)));
            CHECK(u.formula == u.direct);
        }
}

TEST_CASE("local factors of a reduction keep their form") {
    const auto at3 = singular_data(curve("y^2 - x^3 - x^2", 3), 6);
    const auto at5 = singular_data(curve("y^2 - x^3 - x^2", 5), 6);
    REQUIRE(at3.size() == 1);
    REQUIRE(at5.size() == 1);
    CHECK(at3[0].zeta.joint == at5[0].zeta.joint);
    CHECK(at3[0].zeta.single == at5[0].zeta.single);
}
