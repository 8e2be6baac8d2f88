#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "curvesing/curve.hpp"
#include "curvesing/oracle.hpp"
#include "curvesing/zeta_local.hpp"

using namespace curvesing;

namespace {

CurveGerm germ(const char* text) { return CurveGerm(parse_curve(text)); }
CurveGerm germ_mod(const char* text, std::uint32_t p) { return CurveGerm(reduce_mod_p(parse_curve(text), p)); }

MotClass L(int e) { return MotClass::L_power(e); }
const MotClass one(1);

} // namespace

TEST_CASE("value ideal dimensions") {
    LocalRing cusp(germ("y^2 - x^3"));
    const ValueIdealTable tc = value_ideal_dims(cusp, {8}, {8});
    CHECK(tc.at({2}) == 6);
    CHECK(tc.at({3}) == 5);
    CHECK(tc.at({0}) == 7);
    CHECK(tc.at({1}) == 6);

    LocalRing node(germ("x*y"));
    const ValueIdealTable tn = value_ideal_dims(node, {3, 3}, {3, 3});
    CHECK(tn.at({1, 1}) == 4);
    CHECK(tn.at({2, 1}) == 3);
    CHECK(tn.at({2, 2}) == 2);

    LocalRing smooth(germ("y - x^2"));
    const ValueIdealTable ts = value_ideal_dims(smooth, {8}, {8});
    for (int s = 0; s <= 8; ++s) CHECK(ts.at({s}) == 8 - s);
}

TEST_CASE("dimensions are antitone and match the colength") {
    LocalRing ring(germ("(y^2 - x^3)*(y - x)"));
    const std::vector<int> M{9, 9};
    const ValueIdealTable t = value_ideal_dims(ring, M, M);
    for (const auto& [n, d] : t.D) {
        CHECK(t.at(std::vector<int>(2, 0)) - d == static_cast<int>(ring.ell(n)));
        for (int i = 0; i < 2; ++i) {
            std::vector<int> m = n;
            if (++m[i] > M[i]) continue;
            CHECK(t.at(m) <= d);
        }
    }
}

TEST_CASE("fiber classes") {
    LocalRing smooth(germ("y - x^2"));
    const ValueIdealTable ts = value_ideal_dims(smooth, {8}, {8});
    CHECK(fiber_class(ts, {6}) == L(2) - L(1));

    LocalRing cusp(germ("y^2 - x^3"));
    const ValueIdealTable tc = value_ideal_dims(cusp, {8}, {8});
    CHECK(fiber_class(tc, {2}) == L(6) - L(5));
    CHECK(fiber_class(tc, {1}).is_zero());

    LocalRing node(germ("x*y"));
    const ValueIdealTable tn = value_ideal_dims(node, {3, 3}, {3, 3});
    CHECK(fiber_class(tn, {1, 1}) == L(4) - MotClass(2).shifted(3) + L(2));
    CHECK(fiber_class(tn, {1, 0}).is_zero());
}

TEST_CASE("ideal classes") {
    LocalRing smooth(germ("y - x^2"));
    const ValueSemigroup ss = value_semigroup(smooth);
    for (int s = 0; s < 6; ++s) CHECK(ideal_class(smooth, ss, {s}) == one);

    LocalRing cusp(germ("y^2 - x^3"));
    const ValueSemigroup sc = value_semigroup(cusp);
    CHECK(ideal_class(cusp, sc, {2}) == L(1));
    CHECK(ideal_class(cusp, sc, {1}).is_zero());
    CHECK(ideal_class(cusp, sc, {0}) == one);

    LocalRing node(germ("x*y"));
    const ValueSemigroup sn = value_semigroup(node);
    CHECK(ideal_class(node, sn, {1, 1}) == L(1) - one);
}

TEST_CASE("ideal classes do not depend on the truncation") {
    for (const char* text : {"y^2 - x^3", "x*y", "y^2 - x^4", "y^3 - x^7"}) {
        LocalRing ring(germ(text));
        const ValueSemigroup s = value_semigroup(ring);
        for (const auto& n : s.box_members) {
            std::vector<int> M(n.size()), M2(n.size());
            for (std::size_t i = 0; i < n.size(); ++i) {
                M[i] = n[i] + s.conductor[i] + 1;
                M2[i] = n[i] + s.conductor[i] + 4;
            }
            CHECK(ideal_class(ring, s, n, M) == ideal_class(ring, s, n, M2));
        }
    }
}

TEST_CASE("local zeta functions") {
    const LocalZeta smooth = local_zeta(germ("y - x^2"), 6);
    for (int s = 0; s <= 6; ++s) CHECK(smooth.single.coeff({s}) == L(-s));

    const LocalZeta cusp = local_zeta(germ("y^2 - x^3"), 5);
    CHECK(cusp.single.coeff({0}) == one);
    CHECK(cusp.single.coeff({1}).is_zero());
    CHECK(cusp.single.coeff({2}) == L(-1));
    CHECK(cusp.single.coeff({3}) == L(-2));
    CHECK(cusp.single.coeff({4}) == L(-3));
    CHECK(cusp.single.coeff({5}) == L(-4));

    const LocalZeta node = local_zeta(germ("x*y"), 4);
    CHECK(node.joint.coeff({1, 1}) == (L(1) - one) * L(-2));
    CHECK(node.joint.coeff({1, 1}).to_string() == "L^-1 - L^-2");
    CHECK(node.joint.coeff({1, 0}).is_zero());
}

TEST_CASE("joint and single series agree on the diagonal") {
    for (const char* text : {"x*y", "y^2 - x^4", "x*y*(x + y)", "(y^2 - x^3)*(y - x)"}) {
        const LocalZeta z = local_zeta(germ(text), 6);
        CHECK(z.joint.diagonal() == z.single);
    }
}

TEST_CASE("Poincare series") {
    const LocalZeta smooth = local_zeta(germ("y - x^2"), 4);
    const MotSeries ps = poincare_series(smooth);
    for (int s = 0; s <= 4; ++s) CHECK(ps.coeff({s}) == L(-s - 1));

    const LocalZeta cusp = local_zeta(germ("y^2 - x^3"), 4);
    CHECK(poincare_series(cusp).coeff({2}) == L(-3));

    for (const char* text : {"y - x^2", "y^2 - x^3", "x*y", "y^2 - x^4", "y^3 - x^7"}) {
        const LocalZeta z = local_zeta(germ(text), 6);
        CHECK(poincare_series(z).scaled(L(z.delta + 1)) == z.joint);
    }
}

TEST_CASE("counting specialization") {
    const CountingSeries smooth = counting_specialization(local_zeta(germ("y - x^2"), 4).single, 2);
    CHECK(smooth.coeff({0}) == 1);
    CHECK(smooth.coeff({1}) == Rational(1, 2));
    CHECK(smooth.coeff({2}) == Rational(1, 4));

    CHECK(counting_specialization(local_zeta(germ("y^2 - x^3"), 4).single, 3).coeff({3}) == Rational(1, 9));
    CHECK(counting_specialization(local_zeta(germ("x*y"), 4).joint, 2).coeff({1, 1}) == Rational(1, 4));
}

TEST_CASE("oracle counts") {
    const OracleCounts cusp = brute_force_ideal_counts(germ_mod("y^2 - x^3", 2), {2}, 4);
    CHECK(cusp.ideals.at({2}) == 2);

    const OracleCounts node = brute_force_ideal_counts(germ_mod("x*y", 3), {1, 1}, 3);
    CHECK(node.ideals.at({1, 1}) == 2);

    const OracleCounts smooth = brute_force_ideal_counts(germ_mod("y - x^2", 2), {0}, 6);
    for (int s = 0; s <= 6; ++s) CHECK(smooth.ideals.at({s}) == 1);

    CHECK_THROWS_AS(brute_force_ideal_counts(germ_mod("y^2 - x^3", 3), {2}, 6, 50), BudgetExceeded);
}

TEST_CASE("parallel and serial oracles agree") {
    for (const char* text : {"y^2 - x^3", "x*y", "y^2 - x^2*y"}) {
        const CurveGerm g = germ_mod(text, 3);
        const ValueSemigroup s = value_semigroup(g);
        const OracleCounts a = brute_force_ideal_counts(g, s.conductor, 4);
        const OracleCounts b = brute_force_ideal_counts_serial(g, s.conductor, 4);
        CHECK(a.ideals == b.ideals);
        CHECK(a.fibers == b.fibers);
        CHECK(a.projective == b.projective);
        CHECK(a.enumerated == b.enumerated);
    }
}

TEST_CASE("formula agrees with the oracle") {
    for (std::uint32_t q : {2u, 3u, 5u})
        for (const char* text : {"y^2 - x^3", "x*y", "y^2 - x^2*y", "y - x^2", "y^2 - x^3 - x^2", "x*y*(x + y)"}) {
            CAPTURE(text);
            CAPTURE(q);
            const CurveGerm g = germ_mod(text, q);
            LocalRing ring(g);
            const ValueSemigroup s = value_semigroup(ring);
            const OracleCounts oc = brute_force_ideal_counts(g, s.conductor, norm1(s.conductor) + 2, 50'000'000);
            for (const auto& [n, count] : oc.ideals) {
                CHECK(ideal_class(ring, s, n).evaluate(q) == Rational(static_cast<unsigned long>(count)));
                CHECK((q - 1) * oc.projective.at(n) == oc.fibers.at(n));
            }
        }
}

TEST_CASE("L - 1 divides every fiber class") {
    for (const char* text : {"y^2 - x^3", "x*y", "y^2 - x^4", "x*y*(x + y)"}) {
        LocalRing ring(germ(text));
        const ValueSemigroup s = value_semigroup(ring);
        std::vector<int> M(s.d);
        for (int i = 0; i < s.d; ++i) M[i] = 2 * s.conductor[i] + 3;
        const ValueIdealTable t = value_ideal_dims(ring, M, M);
        for (const auto& [n, d] : t.D) {
            bool inner = true;
            for (int i = 0; i < s.d; ++i) inner = inner && n[i] < M[i];
            if (!inner) continue;
            const MotClass f = fiber_class(t, n);
            CHECK_NOTHROW(f.exact_div(L(1) - one));
        }
    }
}

TEST_CASE("zeta depends only on the semigroup") {
    const LocalZeta a = local_zeta(germ("y^2 - x^3"), 6);
    const LocalZeta b = local_zeta(germ("y^2 - x^3 - x^4"), 6);
    CHECK(a.joint == b.joint);
    CHECK(a.single == b.single);
    CHECK(a.delta == b.delta);
    CHECK(a.conductor == b.conductor);
}
