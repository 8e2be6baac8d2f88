#include "curvesing/resolution.hpp"

#include <algorithm>
#include <stdexcept>

#include "blowup.hpp"

namespace curvesing {

using detail::Direction;

std::vector<int> ResolutionProcess::multiplicities() const {
    std::vector<int> out;
    out.reserve(steps.size());
    for (const auto& s : steps) out.push_back(s.multiplicity);
    return out;
}

int ResolutionProcess::noether_delta() const {
    int d = 0;
    for (const auto& s : steps) d += s.multiplicity * (s.multiplicity - 1) / 2;
    return d;
}

namespace {

struct Node {
    BlowupStep step;
    std::vector<Node> children;
    std::vector<int> signature;  // preorder (multiplicity, child count) stream
};

bool done(const BivarPoly& g, unsigned ex) {
    if (g.order() != 1) return false;
    const bool two = (ex & detail::U_AXIS) && (ex & detail::V_AXIS);
    if (two) return false;
    const bool a = !g.coeff(1, 0).is_zero();
    const bool b = !g.coeff(0, 1).is_zero();
    if ((ex & detail::U_AXIS) && !b) return false;
    if ((ex & detail::V_AXIS) && !a) return false;
    return true;
}

// Returns false when the point needs no blow-up.
bool build(const BivarPoly& g, unsigned ex, const BlowupStep& here, Node& out, int& budget) {
    if (done(g, ex)) return false;
    if (--budget < 0) throw WildFailure("blow-up sequence did not terminate");
    const int m = g.order();
    out.step = here;
    out.step.multiplicity = m;
    for (const Direction& d : detail::tangent_directions(g, m)) {
        const BivarPoly h = detail::strict_transform(g, m, d);
        const unsigned ex2 = detail::exceptional_after(ex, d);
        const Field k = g.field();
        BlowupStep next{d.chart, {FieldElem::zero(k), d.c}, 1};
        Node child;
        if (build(h, ex2, next, child, budget)) out.children.push_back(std::move(child));
    }
    std::stable_sort(out.children.begin(), out.children.end(), [](const Node& a, const Node& b) {
        if (a.signature != b.signature) return a.signature > b.signature;
        if (a.step.chart != b.step.chart) return a.step.chart < b.step.chart;
        return canonical_less(a.step.center[1], b.step.center[1]);
    });
    out.signature = {m, static_cast<int>(out.children.size())};
    for (const auto& c : out.children) out.signature.insert(out.signature.end(), c.signature.begin(), c.signature.end());
    return true;
}

void flatten(const Node& n, std::vector<BlowupStep>& out) {
    out.push_back(n.step);
    for (const auto& c : n.children) flatten(c, out);
}

} // namespace

ResolutionProcess resolve_germ(const CurveGerm& g) {
    const Field k = g.field();
    ResolutionProcess p;
    Node root;
    int budget = detail::kMaxDepth;
    if (build(g.equation(), 0u, BlowupStep{0, {FieldElem::zero(k), FieldElem::zero(k)}, 1}, root, budget))
        flatten(root, p.steps);
    p.N = static_cast<int>(p.steps.size());
    // Every blow-up of a point adds one exceptional curve.
    p.exceptional_components = p.N;
    return p;
}

bool same_process(const ResolutionProcess& a, const ResolutionProcess& b) {
    return a.N == b.N && a.multiplicities() == b.multiplicities();
}

std::vector<std::uint32_t> PrimeRange::primes() const {
    if (lo > hi) throw std::invalid_argument("empty prime range");
    std::vector<std::uint32_t> out;
    for (std::uint64_t p = lo; p <= hi; ++p)
        if (is_prime(p)) out.push_back(static_cast<std::uint32_t>(p));
    return out;
}

std::vector<ReductionReport> good_reduction_scan(const BivarPoly& f, PrimeRange range) {
    const ResolutionProcess ref = resolve_germ(CurveGerm(f));
    const auto primes = range.primes();
    std::vector<ReductionReport> out(primes.size());

#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < primes.size(); ++i) {
        ReductionReport& r = out[i];
        r.prime = primes[i];
        try {
            const ResolutionProcess red = resolve_germ(CurveGerm(reduce_mod_p(f, primes[i])));
            if (same_process(ref, red)) {
                r.status = ReductionStatus::Good;
            } else {
                r.status = ReductionStatus::BadProcess;
                r.detail = "process differs: N = " + std::to_string(red.N) + " vs " + std::to_string(ref.N);
            }
        } catch (const BadDenominator& e) {
            r.status = ReductionStatus::BadDenominator;
            r.detail = e.what();
        } catch (const DegenerateReduction& e) {
            r.status = ReductionStatus::DegenerateReduction;
            r.detail = e.what();
        } catch (const NotTotallyRational& e) {
            r.status = ReductionStatus::NotTotallyRational;
            r.detail = e.what();
        } catch (const WildFailure& e) {
            r.status = ReductionStatus::WildFailure;
            r.detail = e.what();
        }
    }
    return out;
}

} // namespace curvesing
