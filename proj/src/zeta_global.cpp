#include "curvesing/zeta_global.hpp"

#include <algorithm>
#include <stdexcept>

#include "curvesing/errors.hpp"
#include "curvesing/gf.hpp"
#include "curvesing/oracle.hpp"

namespace curvesing {

namespace {

struct GfTerm {
    int ex, ey, ez;
    GFq::Elem c;
};

std::vector<GfTerm> lift_terms(const std::vector<HomogTerm>& F, const GFq& k) {
    std::vector<GfTerm> out;
    for (const auto& t : F) {
        const GFq::Elem c = k.from_prime(t.coeff);
        if (c != GFq::kZero) out.push_back({t.e[0], t.e[1], t.e[2], c});
    }
    return out;
}

std::vector<GfTerm> derivative(const std::vector<HomogTerm>& F, int var, const GFq& k) {
    std::vector<GfTerm> out;
    const std::uint64_t p = k.characteristic();
    for (const auto& t : F) {
        if (t.e[var] == 0) continue;
        const auto c = static_cast<std::uint32_t>(std::uint64_t(t.coeff) * (t.e[var] % p) % p);
        if (c == 0) continue;
        std::array<int, 3> e = t.e;
        --e[var];
        out.push_back({e[0], e[1], e[2], k.from_prime(c)});
    }
    return out;
}

GFq::Elem eval(const std::vector<GfTerm>& F, const GFq& k, GFq::Elem x, GFq::Elem y, GFq::Elem z) {
    GFq::Elem acc = GFq::kZero;
    for (const auto& t : F) {
        const GFq::Elem v = k.mul(t.c, k.mul(k.pow(x, t.ex), k.mul(k.pow(y, t.ey), k.pow(z, t.ez))));
        acc = k.add(acc, v);
    }
    return acc;
}

// Counting context for one extension F_{q^m}.
struct Counter {
    const GFq& k;
    std::vector<GfTerm> F;
    std::array<std::vector<GfTerm>, 3> grad;
    int deg_y = 0;

    Counter(const GFq& field, const std::vector<HomogTerm>& terms) : k(field), F(lift_terms(terms, field)) {
        for (int v = 0; v < 3; ++v) grad[v] = derivative(terms, v, field);
        for (const auto& t : F) deg_y = std::max(deg_y, t.ey);
    }

    bool singular(GFq::Elem x, GFq::Elem y, GFq::Elem z) const {
        for (const auto& g : grad)
            if (eval(g, k, x, y, z) != GFq::kZero) return false;
        return true;
    }

    // Points (x : y : 1) for one x; Horner in y.
    void row(std::uint32_t xi, std::uint64_t& points, std::uint64_t& sing) const {
        const GFq::Elem x = k.element(xi);
        std::vector<GFq::Elem> C(deg_y + 1, GFq::kZero);
        for (const auto& t : F) C[t.ey] = k.add(C[t.ey], k.mul(t.c, k.pow(x, t.ex)));
        for (std::uint32_t yi = 0; yi < k.size(); ++yi) {
            const GFq::Elem y = k.element(yi);
            GFq::Elem v = C[deg_y];
            for (int j = deg_y - 1; j >= 0; --j) v = k.add(k.mul(v, y), C[j]);
            if (v != GFq::kZero) continue;
            ++points;
            if (singular(x, y, GFq::kOne)) ++sing;
        }
    }

    // Points on the line z = 0.
    void infinity(std::uint64_t& points, std::uint64_t& sing) const {
        for (std::uint32_t xi = 0; xi < k.size(); ++xi) {
            const GFq::Elem x = k.element(xi);
            if (eval(F, k, x, GFq::kOne, GFq::kZero) == GFq::kZero) {
                ++points;
                if (singular(x, GFq::kOne, GFq::kZero)) ++sing;
            }
        }
        if (eval(F, k, GFq::kOne, GFq::kZero, GFq::kZero) == GFq::kZero) {
            ++points;
            if (singular(GFq::kOne, GFq::kZero, GFq::kZero)) ++sing;
        }
    }
};

std::pair<std::uint64_t, std::uint64_t> count_one(const GlobalCurve& X, int m, bool parallel) {
    const GFq k(X.q(), m);
    const Counter c(k, X.terms());
    std::uint64_t points = 0, sing = 0;
    c.infinity(points, sing);
    const std::int64_t Q = k.size();
    if (parallel) {
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : points, sing)
        for (std::int64_t xi = 0; xi < Q; ++xi) c.row(static_cast<std::uint32_t>(xi), points, sing);
    } else {
        for (std::int64_t xi = 0; xi < Q; ++xi) c.row(static_cast<std::uint32_t>(xi), points, sing);
    }
    return {points, sing};
}

PointCounts count_all(const GlobalCurve& X, int m_max, std::uint64_t budget, bool parallel) {
    if (m_max < 1) throw std::invalid_argument("m_max must be positive");
    PointCounts pc;
    pc.q = X.q();
    pc.singular = static_cast<int>(X.singular_points().size());
    for (const auto& sp : X.singular_points()) {
        // Branch counts of rational singular points; the germ data is cheap.
        pc.branches += static_cast<int>(puiseux_branches(sp.germ, 2).size());
    }
    std::uint64_t Q = 1;
    for (int m = 1; m <= m_max; ++m) {
        Q *= X.q();
        if (Q * Q + Q + 1 > budget)
            throw BudgetExceeded("point count over F_" + std::to_string(X.q()) + "^" + std::to_string(m) +
                                 " needs " + std::to_string(Q * Q + Q + 1) + " evaluations, budget " +
                                 std::to_string(budget));
    }
    for (int m = 1; m <= m_max; ++m) {
        const auto [points, sing] = count_one(X, m, parallel);
        if (sing != static_cast<std::uint64_t>(pc.singular))
            throw NotTotallyRational("singular point over F_" + std::to_string(X.q()) + "^" + std::to_string(m) +
                                     " that is not rational over F_" + std::to_string(X.q()));
        pc.N.push_back(points);
        pc.N_smooth.push_back(points - pc.singular + pc.branches);
    }
    return pc;
}

Integer ipow(std::uint64_t q, unsigned e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), q, e);
    return r;
}

int mobius(int n) {
    int mu = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        mu = -mu;
    }
    return n > 1 ? -mu : mu;
}

using Series = std::vector<Rational>;

Series mul(const Series& a, const Series& b) {
    Series out(a.size(), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; i + j < out.size() && j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

// 1 / (1 - c u^k)
Series geometric(std::size_t len, const Rational& c, int k) {
    Series out(len, Rational(0));
    Rational pw = 1;
    for (std::size_t i = 0; i < len; i += k) {
        out[i] = pw;
        pw *= c;
    }
    return out;
}

Series one_minus_u_pow(std::size_t len, int e) {
    Series out(len, Rational(0));
    Integer binom = 1;
    for (int j = 0; j <= e && j < static_cast<int>(len); ++j) {
        out[j] = Rational(j % 2 ? Integer(-binom) : binom);
        binom = binom * (e - j) / (j + 1);
    }
    return out;
}

Rational normalizer(std::uint32_t q, int r, int delta) {
    Rational f = 1;
    const Rational unit = Rational(1) - Rational(1, q);
    for (int i = 0; i < r; ++i) f *= unit;
    for (int i = 0; i < delta; ++i) f /= q;
    f.canonicalize();
    return f;
}

} // namespace

std::vector<SingularData> singular_data(const GlobalCurve& X, int bound, std::uint64_t budget) {
    std::vector<SingularData> out;
    for (const auto& sp : X.singular_points()) {
        LocalRing ring(sp.germ);
        const ValueSemigroup s = value_semigroup(ring);
        SingularData d{sp.point, s.d, s.delta, s.conductor, local_zeta(ring, s, bound), {}};
        const OracleCounts oc = brute_force_ideal_counts(sp.germ, s.conductor, bound, budget);
        d.oracle_by_degree.assign(bound + 1, 0);
        for (const auto& [n, c] : oc.ideals) d.oracle_by_degree[norm1(n)] += c;
        out.push_back(std::move(d));
    }
    return out;
}

std::uint64_t count_points_over(const GlobalCurve& X, int m, bool parallel) { return count_one(X, m, parallel).first; }

PointCounts count_points(const GlobalCurve& X, int m_max, std::uint64_t budget) {
    return count_all(X, m_max, budget, true);
}

PointCounts count_points_serial(const GlobalCurve& X, int m_max, std::uint64_t budget) {
    return count_all(X, m_max, budget, false);
}

WeilZeta weil_zeta_smooth(const PointCounts& pc, int genus) {
    if (genus < 0) throw InconsistentCounts("negative genus");
    const int m_max = static_cast<int>(pc.N_smooth.size());
    if (m_max < 2 * genus) throw InconsistentCounts("need counts up to m = 2g");
    const std::uint64_t q = pc.q;
    std::vector<Integer> a(m_max + 1, 0), c(m_max + 1, 0);
    for (int j = 1; j <= m_max; ++j) a[j] = Integer(static_cast<unsigned long>(pc.N_smooth[j - 1])) - ipow(q, j) - 1;
    c[0] = 1;
    for (int k = 1; k <= m_max; ++k) {
        Integer s = 0;
        for (int j = 1; j <= k; ++j) s += a[j] * c[k - j];
        if (s % k != 0) throw InconsistentCounts("non-integral numerator coefficient at T^" + std::to_string(k));
        c[k] = s / k;
        if (k > 2 * genus && c[k] != 0)
            throw InconsistentCounts("numerator does not vanish at T^" + std::to_string(k));
    }
    for (int k = 0; k <= genus; ++k)
        if (c[2 * genus - k] != ipow(q, genus - k) * c[k])
            throw InconsistentCounts("functional equation fails at T^" + std::to_string(k));
    for (int m = 1; m <= m_max; ++m)
        if (a[m] * a[m] > Integer(4 * genus * genus) * ipow(q, m))
            throw InconsistentCounts("Weil bound fails over F_q^" + std::to_string(m));
    WeilZeta w{pc.q, genus, {}};
    w.numerator.assign(c.begin(), c.begin() + 2 * genus + 1);
    return w;
}

std::vector<Integer> closed_point_tallies(const std::vector<std::uint64_t>& counts) {
    std::vector<Integer> a(counts.size() + 1, 0);
    for (int k = 1; k <= static_cast<int>(counts.size()); ++k) {
        Integer s = 0;
        for (int d = 1; d <= k; ++d)
            if (k % d == 0) s += mobius(k / d) * Integer(static_cast<unsigned long>(counts[d - 1]));
        if (s % k != 0 || s < 0) throw InconsistentCounts("closed point tally not a natural number");
        a[k] = s / k;
    }
    return a;
}

std::vector<Rational> divisor_zeta(const GlobalCurve& X, const std::vector<SingularData>& sing, const PointCounts& pc,
                                   int bound, LocalSource source) {
    if (static_cast<int>(pc.N.size()) < bound) throw std::invalid_argument("point counts do not reach the bound");
    const std::size_t len = bound + 1;
    std::vector<std::uint64_t> smooth;
    for (int m = 1; m <= bound; ++m) smooth.push_back(pc.N[m - 1] - sing.size());
    const auto a = closed_point_tallies(smooth);
    Series z(len, Rational(0));
    z[0] = 1;
    for (int k = 1; k <= bound; ++k) {
        const Series g = geometric(len, Rational(1), k);
        for (Integer i = 0; i < a[k]; ++i) z = mul(z, g);
    }
    const std::uint64_t q = X.q();
    for (const auto& s : sing) {
        Series local(len, Rational(0));
        for (int k = 0; k <= bound; ++k) {
            if (source == LocalSource::Oracle)
                local[k] = Rational(Integer(static_cast<unsigned long>(s.oracle_by_degree.at(k))));
            else
                local[k] = s.zeta.single.coeff({k}).evaluate(static_cast<std::int64_t>(q)) * Rational(ipow(q, k));
        }
        z = mul(z, local);
    }
    return z;
}

UnitIndex unit_index(const CurveGerm& g, std::uint64_t budget) {
    if (!g.field().is_finite()) throw FieldMismatch("the unit index needs a finite field");
    const std::uint64_t q = g.field().characteristic();
    LocalRing ring(g);
    const ValueSemigroup s = value_semigroup(ring);
    UnitIndex u;
    const Integer f = ipow(q, s.delta - (s.d - 1)) * ipow(q - 1, s.d - 1);
    u.formula = f.get_ui();
    std::vector<int> M = s.conductor;
    for (int& v : M) ++v;
    const UnitCounts uc = enumerate_units(g, M, budget);
    u.truncation = M;
    u.normalization_units = uc.normalization;
    u.ring_units = uc.ring;
    if (uc.ring == 0 || uc.normalization % uc.ring != 0)
        throw IndexMismatch("ring units do not divide normalization units");
    u.direct = uc.normalization / uc.ring;
    if (u.direct != u.formula)
        throw IndexMismatch("unit index " + std::to_string(u.direct) + " by enumeration, " +
                            std::to_string(u.formula) + " by formula");
    return u;
}

FactorizationReport verify_global_factorization(const GlobalCurve& X, int bound, std::uint64_t budget) {
    if (bound < 0) throw std::invalid_argument("bound must be non-negative");
    FactorizationReport rep;
    rep.q = X.q();
    rep.bound = bound;
    const std::uint64_t q = X.q();
    const std::size_t len = bound + 1;

    const auto sing = singular_data(X, bound, budget);
    rep.singular = static_cast<int>(sing.size());
    for (const auto& s : sing) rep.delta += s.delta;
    const int d = X.degree();
    rep.genus = (d - 1) * (d - 2) / 2 - rep.delta;
    if (rep.genus < 0) throw InconsistentCounts("negative geometric genus: the curve is reducible");

    rep.counts = count_points(X, std::max({bound, 2 * rep.genus, 1}), budget);
    rep.weil = weil_zeta_smooth(rep.counts, rep.genus);
    const Rational norm = normalizer(rep.q, rep.singular, rep.delta);

    rep.left = divisor_zeta(X, sing, rep.counts, bound, LocalSource::Oracle);
    for (auto& c : rep.left) c *= norm;

    Series weil(len, Rational(0));
    for (std::size_t k = 0; k < rep.weil.numerator.size() && k < len; ++k) weil[k] = Rational(rep.weil.numerator[k]);
    weil = mul(weil, geometric(len, Rational(1), 1));
    weil = mul(weil, geometric(len, Rational(Integer(static_cast<unsigned long>(q))), 1));
    Series right = weil;
    for (const auto& s : sing) {
        right = mul(right, one_minus_u_pow(len, s.branches));
        Series local(len, Rational(0));
        for (int k = 0; k <= bound; ++k)
            local[k] = s.zeta.single.coeff({k}).evaluate(static_cast<std::int64_t>(q)) * Rational(ipow(q, k));
        right = mul(right, local);
    }
    for (auto& c : right) c *= norm;
    rep.right = right;

    rep.equal = true;
    for (std::size_t k = 0; k < len; ++k) {
        if (rep.left[k] != rep.right[k]) {
            rep.equal = false;
            rep.first_mismatch = static_cast<int>(k);
            break;
        }
    }

    Rational prod = 1;
    const Rational unit = Rational(1) - Rational(1, rep.q);
    for (const auto& sp : X.singular_points()) {
        const UnitIndex ui = unit_index(sp.germ, budget);
        const ValueSemigroup s = value_semigroup(sp.germ);
        for (int i = 0; i < s.d; ++i) prod *= unit;
        prod /= Rational(Integer(static_cast<unsigned long>(ui.direct)));
    }
    prod.canonicalize();
    rep.unit_index_form = prod == norm;
    return rep;
}

} // namespace curvesing
