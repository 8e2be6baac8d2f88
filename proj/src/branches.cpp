#include "curvesing/branches.hpp"

#include <algorithm>
#include <stdexcept>

#include "blowup.hpp"
#include "curvesing/errors.hpp"

namespace curvesing {

using detail::Direction;

namespace {

int order_or(const TruncSeries& s, int fallback) {
    const SeriesOrder o = order_of_series(s);
    if (const auto* v = std::get_if<std::size_t>(&o)) return static_cast<int>(*v);
    return fallback;
}

// Solves g(t, phi(t)) = 0 with phi(0) = 0 when g_v(0,0) != 0.
TruncSeries implicit_branch(const BivarPoly& g, std::size_t n) {
    const Field k = g.field();
    const TruncSeries t = TruncSeries::monomial(FieldElem::one(k), 1, n);
    const BivarPoly gv = g.dy();
    TruncSeries phi(k, n);
    for (std::size_t good = 1; good < n; good *= 2) {
        const TruncSeries r = substitute(g, t, phi);
        if (r.is_zero_to_precision()) break;
        phi = phi - r * substitute(gv, t, phi).inverse();
    }
    if (!substitute(g, t, phi).is_zero_to_precision())
        throw std::logic_error("Newton iteration did not converge on a smooth branch");
    return phi;
}

struct Leaf {
    std::vector<Direction> path;
    BivarPoly g;
    std::vector<int> signature;
};

struct Sub {
    std::vector<Leaf> leaves;
    std::vector<int> signature;
    int chart = 1;
    FieldElem c;
};

// Collects the smooth points reached by blowing up until every branch is
// separated, children in canonical order.
std::vector<Leaf> separate(const BivarPoly& g, int& budget) {
    const int m = g.order();
    if (m == 1) return {Leaf{{}, g, {1}}};
    if (--budget < 0) throw WildFailure("branch separation did not terminate");
    std::vector<Sub> subs;
    for (const Direction& d : detail::tangent_directions(g, m)) {
        Sub s;
        s.chart = d.chart;
        s.c = d.c;
        s.leaves = separate(detail::strict_transform(g, m, d), budget);
        for (auto& l : s.leaves) {
            l.path.insert(l.path.begin(), d);
            s.signature.insert(s.signature.end(), l.signature.begin(), l.signature.end());
        }
        s.signature.insert(s.signature.begin(), {m, static_cast<int>(s.leaves.size())});
        subs.push_back(std::move(s));
    }
    std::stable_sort(subs.begin(), subs.end(), [](const Sub& a, const Sub& b) {
        if (a.signature != b.signature) return a.signature > b.signature;
        if (a.chart != b.chart) return a.chart < b.chart;
        return canonical_less(a.c, b.c);
    });
    std::vector<Leaf> out;
    for (auto& s : subs)
        for (auto& l : s.leaves) out.push_back(std::move(l));
    return out;
}

BranchParam parametrize(const Leaf& leaf, std::size_t n) {
    const Field k = leaf.g.field();
    const TruncSeries t = TruncSeries::monomial(FieldElem::one(k), 1, n);
    TruncSeries u(k, n), v(k, n);
    if (!leaf.g.coeff(0, 1).is_zero()) {
        u = t;
        v = implicit_branch(leaf.g, n);
    } else {
        v = t;
        u = implicit_branch(leaf.g.swap_xy(), n);
    }
    for (auto it = leaf.path.rbegin(); it != leaf.path.rend(); ++it) {
        if (it->chart == 1) {
            const TruncSeries y = u * (TruncSeries::constant(it->c, n) + v);
            v = y;
        } else {
            u = u * v;
        }
    }
    BranchParam b{u, v, 1, false};
    const int big = static_cast<int>(n);
    const int ox = order_or(u, big);
    const int oy = order_or(v, big);
    b.e = std::min(ox, oy);
    b.y_ramified = oy < ox;
    return b;
}

} // namespace

std::size_t default_branch_precision(const CurveGerm& g) {
    const auto d = static_cast<std::size_t>(g.equation().total_degree());
    return std::max<std::size_t>(8, 4 * d * d);
}

std::vector<BranchParam> puiseux_branches(const CurveGerm& g, std::size_t precision) {
    if (precision == 0) throw std::invalid_argument("branch precision must be positive");
    int budget = detail::kMaxDepth;
    const auto leaves = separate(g.equation(), budget);
    std::vector<BranchParam> out;
    out.reserve(leaves.size());
    for (const auto& l : leaves) out.push_back(parametrize(l, precision));
    return out;
}

ValueVector value_of(const BivarPoly& z, const CurveGerm& g, std::vector<BranchParam>& branches) {
    if (!(z.field() == g.field())) throw FieldMismatch("value_of: element and germ over different fields");
    const std::size_t bound =
        static_cast<std::size_t>(std::max(z.total_degree(), 0)) * static_cast<std::size_t>(g.equation().total_degree());
    for (;;) {
        ValueVector out;
        bool undetermined = false;
        for (const auto& b : branches) {
            const SeriesOrder o = order_of_series(substitute(z, b.x, b.y));
            if (const auto* v = std::get_if<std::size_t>(&o)) {
                out.push_back(static_cast<int>(*v));
            } else {
                undetermined = true;
                break;
            }
        }
        if (!undetermined) return out;
        const std::size_t prec = branches.empty() ? 1 : branches.front().precision();
        if (prec > bound) throw ZeroDivisor(z.to_string() + " vanishes on a branch");
        branches = puiseux_branches(g, 2 * prec);
    }
}

} // namespace curvesing
