#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "curvesing/curve.hpp"
#include "curvesing/motivic.hpp"
#include "curvesing/semigroup.hpp"

using namespace curvesing;

namespace {

CurveGerm germ(const char* text) { return CurveGerm(parse_curve(text)); }
CurveGerm germ_mod(const char* text, std::uint32_t p) { return CurveGerm(reduce_mod_p(parse_curve(text), p)); }

// Numerical semigroup generated by gens, as a membership test up to n.
bool generated(const std::vector<int>& gens, int n) {
    std::vector<bool> in(n + 1, false);
    in[0] = true;
    for (int k = 1; k <= n; ++k)
        for (int g : gens)
            if (g <= k && in[k - g]) in[k] = true;
    return in[n];
}

// Value vectors of all F_q combinations of the monomial jets x^a y^b on the
// node's axis branches (t, 0), (0, t), truncated at order M on each side.
std::set<std::vector<int>> node_values_oracle(int q, int M) {
    // Images: 1 -> (1, 1), x^a -> (t^a, 0), y^b -> (0, t^b).
    const int dim = 1 + 2 * (M - 1);
    std::set<std::vector<int>> out;
    std::vector<int> c(dim, 0);
    for (;;) {
        std::vector<int> u(M, 0), v(M, 0);
        u[0] = v[0] = c[0];
        for (int a = 1; a < M; ++a) u[a] = c[a];
        for (int b = 1; b < M; ++b) v[b] = c[M - 1 + b];
        auto ord = [&](const std::vector<int>& s) {
            for (int k = 0; k < M; ++k)
                if (s[k] % q) return k;
            return M;
        };
        const int ou = ord(u), ov = ord(v);
        if (ou < M && ov < M) out.insert({ou, ov});
        int i = 0;
        while (i < dim && ++c[i] == q) c[i++] = 0;
        if (i == dim) break;
    }
    return out;
}

} // namespace

TEST_CASE("jet models") {
    const JetModel cusp = build_jet_model(germ("y^2 - x^3"), {8});
    CHECK(cusp.dimension() == 7);
    std::vector<std::size_t> pivots = cusp.basis().pivots();
    CHECK(pivots == std::vector<std::size_t>{0, 2, 3, 4, 5, 6, 7});

    CHECK(build_jet_model(germ("x*y"), {3, 3}).dimension() == 5);
    CHECK(build_jet_model(germ("y - x^2"), {4}).dimension() == 4);
}

TEST_CASE("delta invariant") {
    CHECK(delta_invariant(germ("y - x^2")) == 0);
    CHECK(delta_invariant(germ("y^2 - x^3")) == 1);
    CHECK(delta_invariant(germ("y^2 - x^4")) == 2);
    CHECK(delta_invariant(germ("x*y")) == 1);
    CHECK(delta_invariant(germ("y^3 - x^7")) == 6);
    CHECK(delta_invariant(germ("x*y*(x + y)")) == 3);
}

TEST_CASE("value semigroups") {
    const ValueSemigroup cusp = value_semigroup(germ("y^2 - x^3"));
    CHECK(cusp.d == 1);
    CHECK(cusp.generators == std::vector<int>{2, 3});
    CHECK(cusp.conductor == std::vector<int>{2});
    CHECK(cusp.delta == 1);

    const ValueSemigroup node = value_semigroup(germ("x*y"));
    CHECK(node.d == 2);
    CHECK(node.conductor == std::vector<int>{1, 1});
    CHECK(node.delta == 1);
    CHECK(node.box_members == std::vector<std::vector<int>>{{0, 0}, {1, 1}, {1, 2}, {2, 1}, {2, 2}});

    const ValueSemigroup smooth = value_semigroup(germ("y - x^2"));
    CHECK(smooth.conductor == std::vector<int>{0});
    CHECK(smooth.delta == 0);
    CHECK(smooth.generators == std::vector<int>{1});

    const ValueSemigroup e8 = value_semigroup(germ("y^3 - x^5"));
    CHECK(e8.generators == std::vector<int>{3, 5});
    CHECK(e8.conductor == std::vector<int>{8});

    const ValueSemigroup tac = value_semigroup(germ("y^2 - x^4"));
    CHECK(tac.conductor == std::vector<int>{2, 2});
    CHECK(tac.delta == 2);
}

TEST_CASE("membership") {
    LocalRing cusp(germ("y^2 - x^3"));
    CHECK_FALSE(semigroup_membership(cusp, {1}));
    CHECK(semigroup_membership(cusp, {2}));
    CHECK(semigroup_membership(cusp, {7}));

    LocalRing node(germ("x*y"));
    CHECK_FALSE(semigroup_membership(node, {1, 0}));
    CHECK(semigroup_membership(node, {5, 7}));
    CHECK(value_semigroup(node).contains({5, 7}));
}

TEST_CASE("node membership against jet enumeration") {
    for (int q : {2, 3}) {
        const auto values = node_values_oracle(q, 4);
        LocalRing ring(germ_mod("x*y", static_cast<std::uint32_t>(q)));
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) CHECK(semigroup_membership(ring, {a, b}) == (values.count({a, b}) == 1));
    }
}

TEST_CASE("more branches than field elements") {
    // Three lines over F_2: no linear form avoids all three, yet the semigroup
    // is the one of any model.
    LocalRing ring(germ_mod("x*y*(x + y)", 2));
    const ValueSemigroup s = value_semigroup(ring);
    CHECK(s.delta == 3);
    CHECK(s.conductor == std::vector<int>{2, 2, 2});
    CHECK(s.contains({1, 1, 1}));
    CHECK_FALSE(ring.rational_member({1, 1, 1}));
    CHECK(ring.fiber_count_mod({1, 1, 1}) == 0);
    CHECK(ring.rational_member({2, 2, 2}));
    CHECK(same_semigroup(s, value_semigroup(germ("x*y*(x + y)"))));

    LocalRing over3(germ_mod("x*y*(x + y)", 3));
    CHECK(over3.rational_member({1, 1, 1}));
    CHECK(over3.fiber_count_mod({1, 1, 1}) == 2);
}

TEST_CASE("semigroup invariants") {
    for (const char* text : {"y^2 - x^3", "x*y", "y^2 - x^4", "y^2 - x^3 - x^2", "y^3 - x^7", "x*y*(x + y)",
                             "(y^2 - x^3)*(y - x)", "y^4 - x^6 - x^7", "(y - x^2)*(y + x^2)*(y - 2*x^2)"}) {
        CAPTURE(text);
        LocalRing ring(germ(text));
        const ValueSemigroup s = value_semigroup(ring);
        CHECK(norm1(s.conductor) == 2 * s.delta);
        CHECK(static_cast<int>(ring.ell(s.conductor)) == s.delta);
        CHECK(s.contains(std::vector<int>(s.d, 0)));

        std::set<std::vector<int>> members(s.box_members.begin(), s.box_members.end());
        for (const auto& a : s.box_members)
            for (const auto& b : s.box_members) {
                std::vector<int> c(s.d);
                bool inside = true;
                for (int i = 0; i < s.d; ++i) {
                    c[i] = a[i] + b[i];
                    inside = inside && c[i] <= s.conductor[i] + 1;
                }
                if (inside) CHECK(members.count(c) == 1);
            }

        if (s.d == 1) {
            for (int n = 0; n <= s.conductor[0] + 1; ++n)
                CHECK(generated(s.generators, n) == (members.count({n}) == 1));
        }
    }
}

TEST_CASE("values of random elements lie in the semigroup") {
    for (const char* text : {"y^2 - x^3", "x*y", "y^3 - x^7", "(y^2 - x^3)*(y - x)"}) {
        CAPTURE(text);
        const CurveGerm g = germ(text);
        LocalRing ring(g);
        const ValueSemigroup s = value_semigroup(ring);
        auto bs = ring.branches();
        std::mt19937 rng(23);
        std::uniform_int_distribution<int> e(0, 4), coef(-3, 3);
        int tested = 0;
        for (int it = 0; it < 2000 && tested < 50; ++it) {
            BivarPoly z(Field::rationals());
            for (int k = 0; k < 4; ++k) z += BivarPoly::monomial(FieldElem(Rational(coef(rng))), e(rng), e(rng));
            if (z.is_zero()) continue;
            ValueVector v;
            try {
                v = value_of(z, g, bs);
            } catch (const ZeroDivisor&) {
                continue;
            }
            CHECK(s.contains(v));
            ++tested;
        }
        CHECK(tested == 50);
    }
}

TEST_CASE("reduction scans") {
    std::map<std::uint32_t, ReductionStatus> nodal;
    for (const auto& r : reduction_semigroup_scan(parse_curve("y^2 - x^3 - x^2"), {2, 13})) nodal[r.prime] = r.status;
    CHECK(nodal.at(2) == ReductionStatus::BadSemigroup);
    for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) CHECK(nodal.at(p) == ReductionStatus::Good);

    for (const auto& r : reduction_semigroup_scan(parse_curve("y^2 - x^3"), {5, 13}))
        CHECK(r.status == ReductionStatus::Good);
    for (const auto& r : reduction_semigroup_scan(parse_curve("x*y"), {2, 13}))
        CHECK(r.status == ReductionStatus::Good);
}

TEST_CASE("semigroups match across fields up to branch order") {
    CHECK(same_semigroup(value_semigroup(germ("(y^2 - x^3)*(y - x)")),
                         value_semigroup(germ_mod("(y^2 - x^3)*(y - x)", 7))));
    CHECK_FALSE(same_semigroup(value_semigroup(germ("y^2 - x^3")), value_semigroup(germ("y^2 - x^5"))));
}

TEST_CASE("truncation stability") {
    for (const char* text : {"y^2 - x^3", "x*y", "y^2 - x^4", "y^3 - x^7"}) {
        LocalRing ring(germ(text));
        const ValueSemigroup s = value_semigroup(ring);
        std::vector<int> M = ring.truncation();
        std::vector<int> M2 = M;
        for (int& v : M2) v *= 2;
        CHECK(ring.jet_codimension(M) == s.delta);
        CHECK(ring.jet_codimension(M2) == s.delta);
    }
}
