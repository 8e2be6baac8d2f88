#include "curvesing/semigroup.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "curvesing/errors.hpp"

namespace curvesing {

namespace {

// Product of a block with a series, truncated to the block length.
void mul_block(const Vec& in, std::size_t off, int len, const TruncSeries& s, Vec& out) {
    for (int a = 0; a < len; ++a) {
        const FieldElem& c = in[off + a];
        if (c.is_zero()) continue;
        for (int b = 1; a + b < len; ++b) {
            const FieldElem& sb = s.coeff(b);
            if (!sb.is_zero()) out[off + a + b] += c * sb;
        }
    }
}

std::vector<int> doubled(std::vector<int> v) {
    for (int& x : v) x *= 2;
    return v;
}

int norm(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

// Calls fn on every n with 0 <= n <= hi componentwise, lexicographically.
template <class Fn>
void for_box(const std::vector<int>& hi, Fn&& fn) {
    std::vector<int> n(hi.size(), 0);
    for (;;) {
        fn(n);
        std::size_t i = n.size();
        while (i > 0) {
            --i;
            if (n[i] < hi[i]) {
                ++n[i];
                std::fill(n.begin() + i + 1, n.end(), 0);
                break;
            }
            if (i == 0) return;
        }
        if (n.empty()) return;
    }
}

} // namespace

// ----------------------------------------------------------------- JetModel

JetModel::JetModel(const std::vector<BranchParam>& branches, std::vector<int> M)
    : M_(std::move(M)), basis_(branches.empty() ? Field::rationals() : branches.front().x.field(), 0) {
    if (branches.empty() || branches.size() != M_.size())
        throw std::invalid_argument("jet model needs one truncation per branch");
    const Field k = branches.front().x.field();
    std::size_t cols = 0;
    for (std::size_t i = 0; i < M_.size(); ++i) {
        if (M_[i] < 1) throw std::invalid_argument("truncation must be positive");
        if (static_cast<int>(branches[i].precision()) < M_[i])
            throw PrecisionExhausted("branch precision below jet truncation");
        offset_.push_back(cols);
        cols += M_[i];
    }
    basis_ = EchelonBasis(k, cols);

    Vec one(cols, FieldElem::zero(k));
    for (std::size_t i = 0; i < M_.size(); ++i) one[offset_[i]] = FieldElem::one(k);
    std::deque<Vec> queue;
    basis_.insert(one);
    queue.push_back(std::move(one));
    while (!queue.empty()) {
        const Vec w = std::move(queue.front());
        queue.pop_front();
        for (int var = 0; var < 2; ++var) {
            Vec prod(cols, FieldElem::zero(k));
            for (std::size_t i = 0; i < M_.size(); ++i)
                mul_block(w, offset_[i], M_[i], var == 0 ? branches[i].x : branches[i].y, prod);
            if (basis_.insert(prod)) queue.push_back(std::move(prod));
        }
    }
}

std::size_t JetModel::ell(const std::vector<int>& n) const {
    if (n.size() != M_.size()) throw std::invalid_argument("value vector arity mismatch");
    std::vector<std::size_t> cols;
    for (std::size_t i = 0; i < n.size(); ++i) {
        if (n[i] > M_[i]) throw PrecisionExhausted("value beyond jet truncation");
        for (int j = 0; j < n[i]; ++j) cols.push_back(offset_[i] + j);
    }
    return projected_rank(basis_.field(), basis_.rows(), cols);
}

JetModel build_jet_model(const CurveGerm& g, const std::vector<int>& M) {
    const int top = *std::max_element(M.begin(), M.end());
    return JetModel(puiseux_branches(g, static_cast<std::size_t>(top)), M);
}

// ---------------------------------------------------------------- LocalRing

LocalRing::LocalRing(const CurveGerm& g) : germ_(g), process_(resolve_germ(g)) {
    const int start = 2 * process_.noether_delta() + 2;
    branches_ = puiseux_branches(germ_, static_cast<std::size_t>(start));
    std::vector<int> M(branches_.size(), start);
    for (int attempt = 0; attempt < 3; ++attempt) {
        const int a = jet_codimension(M);
        const int b = jet_codimension(doubled(M));
        if (a == b) {
            delta_ = a;
            rebuild(M);
            return;
        }
        M = doubled(M);
    }
    throw NonStabilized("delta did not stabilize under doubling the truncation");
}

int LocalRing::jet_codimension(const std::vector<int>& M) const {
    const int top = *std::max_element(M.begin(), M.end());
    const JetModel jm(puiseux_branches(germ_, static_cast<std::size_t>(top)), M);
    return norm(M) - static_cast<int>(jm.dimension());
}

void LocalRing::rebuild(std::vector<int> M) {
    const int top = *std::max_element(M.begin(), M.end());
    branches_ = puiseux_branches(germ_, static_cast<std::size_t>(top));
    model_.emplace(branches_, std::move(M));
}

void LocalRing::ensure(const std::vector<int>& bound) {
    const auto& M = model_->truncation();
    bool grow = false;
    for (std::size_t i = 0; i < M.size(); ++i) grow = grow || bound.at(i) > M[i];
    if (!grow) return;
    std::vector<int> next = doubled(M);
    for (std::size_t i = 0; i < next.size(); ++i) next[i] = std::max(next[i], bound[i]);
    rebuild(std::move(next));
}

std::size_t LocalRing::ell(const std::vector<int>& n) {
    if (static_cast<int>(n.size()) != branch_count()) throw std::invalid_argument("value vector arity mismatch");
    if (auto it = ell_cache_.find(n); it != ell_cache_.end()) return it->second;
    ensure(n);
    const std::size_t v = model_->ell(n);
    ell_cache_.emplace(n, v);
    return v;
}

Integer LocalRing::fiber_count_mod(const std::vector<int>& n) {
    if (!field().is_finite()) throw FieldMismatch("point counts need a finite field");
    const std::size_t d = n.size();
    const Integer q = static_cast<unsigned long>(field().characteristic());
    std::vector<int> top = n;
    for (int& v : top) ++v;
    const std::size_t full = ell(top);
    Integer total = 0;
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
        std::vector<int> m = n;
        for (std::size_t i = 0; i < d; ++i)
            if (mask & (1u << i)) ++m[i];
        Integer term;
        mpz_pow_ui(term.get_mpz_t(), q.get_mpz_t(), full - ell(m));
        if (std::popcount(mask) % 2)
            total -= term;
        else
            total += term;
    }
    return total;
}

bool LocalRing::rational_member(const std::vector<int>& n) {
    if (!field().is_finite() || n.size() <= field().characteristic()) return member(n);
    return fiber_count_mod(n) > 0;
}

bool LocalRing::member(const std::vector<int>& n) {
    const std::size_t d = n.size();
    const std::size_t base = ell(n);
    for (std::size_t i = 0; i < d; ++i) {
        std::vector<int> m = n;
        ++m[i];
        if (ell(m) == base) return false;
    }
    return true;
}

int delta_invariant(const CurveGerm& g) { return LocalRing(g).delta(); }

// ----------------------------------------------------------- ValueSemigroup

bool ValueSemigroup::contains(const std::vector<int>& n) const {
    if (static_cast<int>(n.size()) != d) throw std::invalid_argument("value vector arity mismatch");
    std::vector<int> c(n.size());
    for (std::size_t i = 0; i < n.size(); ++i) {
        if (n[i] < 0) return false;
        c[i] = std::min(n[i], conductor[i]);
    }
    return std::binary_search(box_members.begin(), box_members.end(), c);
}

ValueSemigroup value_semigroup(LocalRing& ring) {
    ValueSemigroup s;
    s.d = ring.branch_count();
    s.delta = ring.delta();
    const std::vector<int> box(s.d, 2 * s.delta);
    ring.ensure(std::vector<int>(s.d, 2 * s.delta + 2));

    std::vector<int> gamma(s.d, 2 * s.delta);
    bool found = false;
    for_box(box, [&](const std::vector<int>& c) {
        if (static_cast<int>(ring.ell(c)) != norm(c) - s.delta) return;
        found = true;
        for (int i = 0; i < s.d; ++i) gamma[i] = std::min(gamma[i], c[i]);
    });
    if (!found || static_cast<int>(ring.ell(gamma)) != norm(gamma) - s.delta)
        throw std::logic_error("conductor search failed");
    if (norm(gamma) != 2 * s.delta) throw std::logic_error("conductor violates Gorenstein symmetry");
    s.conductor = gamma;

    std::vector<int> upper = gamma;
    for (int& v : upper) ++v;
    for_box(upper, [&](const std::vector<int>& n) {
        if (ring.member(n)) s.box_members.push_back(n);
    });

    if (s.d == 1) {
        const int g = gamma[0];
        int m = 0;
        for (int v = 1; v <= g + 1 && m == 0; ++v)
            if (s.contains({v})) m = v;
        std::vector<int> elems;
        for (int v = 1; v <= g + m; ++v)
            if (s.contains({v})) elems.push_back(v);
        for (int v : elems) {
            bool decomposable = false;
            for (int a : elems) {
                if (a >= v) break;
                if (s.contains({v - a}) && v - a > 0) decomposable = true;
            }
            if (!decomposable) s.generators.push_back(v);
        }
    }
    return s;
}

ValueSemigroup value_semigroup(const CurveGerm& g) {
    LocalRing ring(g);
    return value_semigroup(ring);
}

bool semigroup_membership(LocalRing& ring, const std::vector<int>& n) {
    for (int v : n)
        if (v < 0) throw std::invalid_argument("negative value vector");
    return ring.member(n);
}

bool same_semigroup(const ValueSemigroup& a, const ValueSemigroup& b) {
    if (a.d != b.d || a.delta != b.delta || a.generators != b.generators) return false;
    std::vector<int> perm(a.d);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int i = 0; i < a.d && ok; ++i) ok = a.conductor[perm[i]] == b.conductor[i];
        if (!ok) continue;
        std::vector<std::vector<int>> moved;
        for (const auto& n : a.box_members) {
            std::vector<int> m(a.d);
            for (int i = 0; i < a.d; ++i) m[i] = n[perm[i]];
            moved.push_back(std::move(m));
        }
        std::sort(moved.begin(), moved.end());
        if (moved == b.box_members) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// -------------------------------------------------------------------- scans

namespace {

ReductionReport failure(std::uint32_t p, ReductionStatus s, const char* what) {
    return ReductionReport{p, s, what};
}

} // namespace

std::vector<CoherenceRow> reduction_scan(const BivarPoly& f, PrimeRange range) {
    const CurveGerm g0(f);
    const ResolutionProcess ref_process = resolve_germ(g0);
    const ValueSemigroup ref = value_semigroup(g0);
    const auto primes = range.primes();
    std::vector<CoherenceRow> out(primes.size());

#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < primes.size(); ++i) {
        const std::uint32_t p = primes[i];
        CoherenceRow& row = out[i];
        try {
            const CurveGerm g(reduce_mod_p(f, p));
            const ResolutionProcess proc = resolve_germ(g);
            row.process = same_process(ref_process, proc)
                              ? ReductionReport{p, ReductionStatus::Good, ""}
                              : ReductionReport{p, ReductionStatus::BadProcess, "multiplicity sequence differs"};
            const ValueSemigroup s = value_semigroup(g);
            row.semigroup = same_semigroup(ref, s)
                                ? ReductionReport{p, ReductionStatus::Good, ""}
                                : ReductionReport{p, ReductionStatus::BadSemigroup,
                                                  "semigroup differs: d = " + std::to_string(s.d) +
                                                      ", delta = " + std::to_string(s.delta)};
        } catch (const BadDenominator& e) {
            row.process = row.semigroup = failure(p, ReductionStatus::BadDenominator, e.what());
        } catch (const DegenerateReduction& e) {
            row.process = row.semigroup = failure(p, ReductionStatus::DegenerateReduction, e.what());
        } catch (const NotTotallyRational& e) {
            row.semigroup = failure(p, ReductionStatus::NotTotallyRational, e.what());
            if (row.process.prime == 0) row.process = row.semigroup;
        } catch (const WildFailure& e) {
            row.semigroup = failure(p, ReductionStatus::WildFailure, e.what());
            if (row.process.prime == 0) row.process = row.semigroup;
        }
    }
    return out;
}

std::vector<ReductionReport> reduction_semigroup_scan(const BivarPoly& f, PrimeRange range) {
    std::vector<ReductionReport> out;
    for (auto& row : reduction_scan(f, range)) out.push_back(std::move(row.semigroup));
    return out;
}

} // namespace curvesing
