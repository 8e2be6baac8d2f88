#include "curvesing/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "curvesing/branches.hpp"
#include "curvesing/errors.hpp"

namespace curvesing {

namespace {

using Digits = std::vector<std::uint32_t>;

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t q) {
    std::uint64_t r = 1, b = a, e = q - 2;
    while (e) {
        if (e & 1) r = r * b % q;
        b = b * b % q;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

std::uint64_t saturating_pow(std::uint64_t q, std::size_t e) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < e; ++i) {
        if (r > UINT64_MAX / q) return UINT64_MAX;
        r *= q;
    }
    return r;
}

class ModEchelon {
public:
    ModEchelon(std::uint32_t q, std::size_t cols) : q_(q), cols_(cols) {}

    bool insert(Digits v) {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const std::uint32_t c = v[piv_[r]];
            if (!c) continue;
            const std::uint32_t neg = q_ - c;
            for (std::size_t j = piv_[r]; j < cols_; ++j)
                v[j] = static_cast<std::uint32_t>((v[j] + std::uint64_t(neg) * rows_[r][j]) % q_);
        }
        std::size_t p = 0;
        while (p < cols_ && v[p] == 0) ++p;
        if (p == cols_) return false;
        const std::uint32_t inv = inv_mod(v[p], q_);
        for (std::size_t j = p; j < cols_; ++j) v[j] = static_cast<std::uint32_t>(std::uint64_t(v[j]) * inv % q_);
        for (auto& row : rows_) {
            const std::uint32_t c = row[p];
            if (!c) continue;
            const std::uint32_t neg = q_ - c;
            for (std::size_t j = p; j < cols_; ++j)
                row[j] = static_cast<std::uint32_t>((row[j] + std::uint64_t(neg) * v[j]) % q_);
        }
        const auto pos = std::lower_bound(piv_.begin(), piv_.end(), p) - piv_.begin();
        piv_.insert(piv_.begin() + pos, p);
        rows_.insert(rows_.begin() + pos, std::move(v));
        return true;
    }

    const std::vector<Digits>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return piv_; }

    std::string key() const {
        std::string s;
        s.reserve(rows_.size() * cols_);
        for (const auto& r : rows_)
            for (std::uint32_t d : r) s.push_back(static_cast<char>(d));
        return s;
    }

private:
    std::uint32_t q_;
    std::size_t cols_;
    std::vector<Digits> rows_;
    std::vector<std::size_t> piv_;
};

// Jets of prod_i F_q[t]/(t^M_i) with the images of x and y.
struct Jets {
    std::uint32_t q;
    std::vector<int> M;
    std::vector<std::size_t> off;
    std::size_t cols = 0;
    Digits X, Y;

    Jets(const CurveGerm& g, std::vector<int> trunc) : q(g.field().characteristic()), M(std::move(trunc)) {
        if (q > 255) throw std::invalid_argument("jet enumeration supports q < 256");
        const int top = *std::max_element(M.begin(), M.end());
        const auto br = puiseux_branches(g, static_cast<std::size_t>(top));
        if (br.size() != M.size()) throw std::invalid_argument("truncation arity does not match branch count");
        for (int m : M) {
            off.push_back(cols);
            cols += m;
        }
        X.assign(cols, 0);
        Y.assign(cols, 0);
        for (std::size_t i = 0; i < M.size(); ++i)
            for (int j = 0; j < M[i]; ++j) {
                X[off[i] + j] = br[i].x.coeff(j).residue();
                Y[off[i] + j] = br[i].y.coeff(j).residue();
            }
    }

    Digits mul(const Digits& a, const Digits& b) const {
        Digits out(cols, 0);
        for (std::size_t i = 0; i < M.size(); ++i) {
            const std::size_t o = off[i];
            for (int s = 0; s < M[i]; ++s) {
                if (!a[o + s]) continue;
                for (int t = 0; s + t < M[i]; ++t)
                    out[o + s + t] = static_cast<std::uint32_t>((out[o + s + t] + std::uint64_t(a[o + s]) * b[o + t]) % q);
            }
        }
        return out;
    }

    Digits one() const {
        Digits v(cols, 0);
        for (std::size_t o : off) v[o] = 1;
        return v;
    }

    /// Basis of the image of the local ring.
    std::vector<Digits> ring_basis() const {
        ModEchelon e(q, cols);
        std::vector<Digits> out, queue{one()};
        e.insert(queue.front());
        out.push_back(queue.front());
        for (std::size_t k = 0; k < queue.size(); ++k) {
            for (const Digits* s : {&X, &Y}) {
                Digits p = mul(queue[k], *s);
                if (e.insert(p)) {
                    out.push_back(p);
                    queue.push_back(std::move(p));
                }
            }
        }
        return out;
    }

    /// Basis of C(n) modulo C(M): ring elements whose low coefficients vanish.
    std::vector<Digits> ideal_basis(const std::vector<Digits>& ring, const std::vector<int>& n) const {
        std::vector<std::size_t> order;
        std::vector<char> low(cols, 0);
        for (std::size_t i = 0; i < M.size(); ++i)
            for (int j = 0; j < n[i]; ++j) low[off[i] + j] = 1;
        for (std::size_t c = 0; c < cols; ++c)
            if (low[c]) order.push_back(c);
        const std::size_t nlow = order.size();
        for (std::size_t c = 0; c < cols; ++c)
            if (!low[c]) order.push_back(c);
        ModEchelon e(q, cols);
        for (const auto& v : ring) {
            Digits p(cols);
            for (std::size_t c = 0; c < cols; ++c) p[c] = v[order[c]];
            e.insert(std::move(p));
        }
        std::vector<Digits> out;
        for (std::size_t r = 0; r < e.rows().size(); ++r) {
            if (e.pivots()[r] < nlow) continue;
            Digits v(cols);
            for (std::size_t c = 0; c < cols; ++c) v[order[c]] = e.rows()[r][c];
            out.push_back(std::move(v));
        }
        return out;
    }
};

struct FiberTask {
    const Jets* jets;
    std::vector<Digits> ring;   // basis of O / C(M)
    std::vector<Digits> ideal;  // basis of C(n) / C(M)
    std::vector<int> n;
    std::uint64_t size = 0;     // q^dim ideal
};

struct Tally {
    std::uint64_t fiber = 0;
    std::uint64_t projective = 0;
};

// Scans combination indices [lo, hi) of the C(n) basis.
void scan(const FiberTask& t, std::uint64_t lo, std::uint64_t hi, Tally& tally, std::unordered_set<std::string>& keys) {
    const Jets& J = *t.jets;
    const std::size_t D = t.ideal.size();
    Digits coef(D), z(J.cols);
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
        std::uint64_t r = idx;
        for (std::size_t k = 0; k < D; ++k) {
            coef[k] = static_cast<std::uint32_t>(r % J.q);
            r /= J.q;
        }
        std::fill(z.begin(), z.end(), 0);
        for (std::size_t k = 0; k < D; ++k) {
            if (!coef[k]) continue;
            for (std::size_t c = 0; c < J.cols; ++c)
                z[c] = static_cast<std::uint32_t>((z[c] + std::uint64_t(coef[k]) * t.ideal[k][c]) % J.q);
        }
        bool exact = true;
        for (std::size_t i = 0; i < J.M.size() && exact; ++i) exact = z[J.off[i] + t.n[i]] != 0;
        if (!exact) continue;
        ++tally.fiber;
        std::size_t first = 0;
        while (coef[first] == 0) ++first;
        if (coef[first] != 1) continue;
        ++tally.projective;
        ModEchelon e(J.q, J.cols);
        for (const auto& b : t.ring) e.insert(J.mul(z, b));
        keys.insert(e.key());
    }
}

std::vector<std::vector<int>> exponents_up_to(std::size_t d, int bound) {
    std::vector<std::vector<int>> out;
    std::vector<int> n(d, 0);
    for (;;) {
        out.push_back(n);
        std::size_t i = d;
        bool advanced = false;
        while (i > 0) {
            --i;
            ++n[i];
            if (std::accumulate(n.begin(), n.end(), 0) <= bound) {
                advanced = true;
                break;
            }
            n[i] = 0;
        }
        if (!advanced) return out;
    }
}

template <class Runner>
OracleCounts run_oracle(const CurveGerm& g, const std::vector<int>& conductor, int bound, std::uint64_t budget,
                        Runner&& runner) {
    if (!g.field().is_finite()) throw FieldMismatch("the jet oracle needs a finite field");
    if (bound < 0) throw std::invalid_argument("oracle bound must be non-negative");
    OracleCounts out;
    out.q = g.field().characteristic();
    out.bound = bound;
    const std::size_t d = conductor.size();

    std::map<std::vector<int>, Jets> jets;
    std::vector<FiberTask> tasks;
    std::uint64_t total = 0;
    for (const auto& n : exponents_up_to(d, bound)) {
        std::vector<int> M(d);
        for (std::size_t i = 0; i < d; ++i) M[i] = n[i] + conductor[i] + 1;
        auto it = jets.find(M);
        if (it == jets.end()) it = jets.emplace(M, Jets(g, M)).first;
        FiberTask t{&it->second, it->second.ring_basis(), {}, n, 0};
        t.ideal = it->second.ideal_basis(t.ring, n);
        t.size = saturating_pow(out.q, t.ideal.size());
        total = (total > UINT64_MAX - t.size) ? UINT64_MAX : total + t.size;
        if (total > budget)
            throw BudgetExceeded("jet enumeration needs more than " + std::to_string(budget) + " elements");
        out.truncation.emplace(n, M);
        tasks.push_back(std::move(t));
    }
    out.enumerated = total;
    for (const auto& t : tasks) {
        Tally tally;
        const std::uint64_t ideals = runner(t, tally);
        out.ideals.emplace(t.n, ideals);
        out.fibers.emplace(t.n, tally.fiber);
        out.projective.emplace(t.n, tally.projective);
    }
    return out;
}

} // namespace

OracleCounts brute_force_ideal_counts_serial(const CurveGerm& g, const std::vector<int>& conductor, int bound,
                                             std::uint64_t budget) {
    return run_oracle(g, conductor, bound, budget, [](const FiberTask& t, Tally& tally) {
        std::unordered_set<std::string> keys;
        scan(t, 0, t.size, tally, keys);
        return static_cast<std::uint64_t>(keys.size());
    });
}

OracleCounts brute_force_ideal_counts(const CurveGerm& g, const std::vector<int>& conductor, int bound,
                                      std::uint64_t budget) {
    return run_oracle(g, conductor, bound, budget, [](const FiberTask& t, Tally& tally) {
        std::unordered_set<std::string> keys;
        std::uint64_t fiber = 0, projective = 0;
#pragma omp parallel reduction(+ : fiber, projective)
        {
            std::unordered_set<std::string> local;
            Tally mine;
#pragma omp for schedule(static)
            for (std::int64_t block = 0; block < 64; ++block) {
                const std::uint64_t lo = t.size * static_cast<std::uint64_t>(block) / 64;
                const std::uint64_t hi = t.size * static_cast<std::uint64_t>(block + 1) / 64;
                scan(t, lo, hi, mine, local);
            }
            fiber += mine.fiber;
            projective += mine.projective;
#pragma omp critical(oracle_merge)
            keys.insert(local.begin(), local.end());
        }
        tally.fiber = fiber;
        tally.projective = projective;
        return static_cast<std::uint64_t>(keys.size());
    });
}

UnitCounts enumerate_units(const CurveGerm& g, const std::vector<int>& M, std::uint64_t budget) {
    if (!g.field().is_finite()) throw FieldMismatch("unit enumeration needs a finite field");
    const Jets J(g, M);
    const auto ring = J.ring_basis();
    const std::uint64_t big = saturating_pow(J.q, J.cols);
    const std::uint64_t small = saturating_pow(J.q, ring.size());
    if (big > budget || small > budget - std::min(big, budget))
        throw BudgetExceeded("unit enumeration exceeds the budget");

    UnitCounts out{M, 0, 0};
    Digits z(J.cols);
    for (std::uint64_t idx = 0; idx < big; ++idx) {
        std::uint64_t r = idx;
        for (std::size_t c = 0; c < J.cols; ++c) {
            z[c] = static_cast<std::uint32_t>(r % J.q);
            r /= J.q;
        }
        bool unit = true;
        for (std::size_t o : J.off) unit = unit && z[o] != 0;
        out.normalization += unit;
    }
    for (std::uint64_t idx = 0; idx < small; ++idx) {
        std::uint64_t r = idx;
        std::fill(z.begin(), z.end(), 0);
        for (const auto& b : ring) {
            const std::uint32_t c = static_cast<std::uint32_t>(r % J.q);
            r /= J.q;
            if (!c) continue;
            for (std::size_t k = 0; k < J.cols; ++k)
                z[k] = static_cast<std::uint32_t>((z[k] + std::uint64_t(c) * b[k]) % J.q);
        }
        bool unit = true;
        for (std::size_t o : J.off) unit = unit && z[o] != 0;
        out.ring += unit;
    }
    return out;
}

} // namespace curvesing
