#include "curvesing/zeta_local.hpp"

#include <bit>
#include <stdexcept>

#include "curvesing/errors.hpp"

namespace curvesing {

int ValueIdealTable::at(const std::vector<int>& n) const {
    auto it = D.find(n);
    if (it == D.end()) throw std::out_of_range("value ideal table does not cover the exponent");
    return it->second;
}

ValueIdealTable value_ideal_dims(LocalRing& ring, const std::vector<int>& M, const std::vector<int>& upper) {
    if (M.size() != upper.size() || static_cast<int>(M.size()) != ring.branch_count())
        throw std::invalid_argument("value ideal table arity mismatch");
    for (std::size_t i = 0; i < M.size(); ++i)
        if (upper[i] > M[i]) throw std::invalid_argument("table region exceeds the truncation");
    ValueIdealTable t{M, {}};
    const int top = static_cast<int>(ring.ell(M));
    std::vector<int> n(M.size(), 0);
    for (;;) {
        t.D.emplace(n, top - static_cast<int>(ring.ell(n)));
        std::size_t i = n.size();
        bool advanced = false;
        while (i > 0) {
            --i;
            if (n[i] < upper[i]) {
                ++n[i];
                std::fill(n.begin() + i + 1, n.end(), 0);
                advanced = true;
                break;
            }
        }
        if (!advanced) break;
    }
    return t;
}

MotClass fiber_class(const ValueIdealTable& table, const std::vector<int>& n) {
    const std::size_t d = n.size();
    MotClass acc;
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
        std::vector<int> m = n;
        for (std::size_t i = 0; i < d; ++i)
            if (mask & (1u << i)) ++m[i];
        const MotClass term = MotClass::L_power(table.at(m));
        if (std::popcount(mask) % 2)
            acc -= term;
        else
            acc += term;
    }
    return acc;
}

MotClass ideal_class(LocalRing& ring, const ValueSemigroup& s, const std::vector<int>& n,
                     std::optional<std::vector<int>> M) {
    const std::size_t d = n.size();
    if (static_cast<int>(d) != s.d) throw std::invalid_argument("exponent arity mismatch");
    std::vector<int> trunc(d);
    for (std::size_t i = 0; i < d; ++i) trunc[i] = n[i] + s.conductor[i] + 1;
    if (M) {
        for (std::size_t i = 0; i < d; ++i)
            if ((*M)[i] < trunc[i]) throw std::invalid_argument("truncation below n + conductor + 1");
        trunc = *M;
    }
    std::vector<int> upper = n;
    for (int& v : upper) ++v;
    const ValueIdealTable table = value_ideal_dims(ring, trunc, upper);
    const MotClass fiber = fiber_class(table, n);
    if (fiber.is_zero()) return fiber;
    std::vector<int> rest(d);
    for (std::size_t i = 0; i < d; ++i) rest[i] = trunc[i] - n[i];
    const int shift = 1 - static_cast<int>(ring.ell(rest));
    const MotClass L1 = MotClass::lefschetz() - MotClass(1);
    return fiber.shifted(shift).exact_div(L1);
}

LocalZeta local_zeta(LocalRing& ring, const ValueSemigroup& s, int bound) {
    if (bound < 0) throw std::invalid_argument("series bound must be non-negative");
    LocalZeta z{MotSeries(s.d, bound), MotSeries(1, bound), s.delta, s.conductor};
    std::vector<int> n(s.d, 0);
    // All n with |n| <= bound, lexicographically.
    for (;;) {
        const int size = norm1(n);
        const MotClass c = ideal_class(ring, s, n);
        if (!c.is_zero()) {
            const MotClass term = c.shifted(-size);
            z.joint.add(n, term);
            z.single.add({size}, term);
        }
        std::size_t i = n.size();
        bool advanced = false;
        while (i > 0) {
            --i;
            ++n[i];
            if (norm1(n) <= bound) {
                std::fill(n.begin() + i + 1, n.end(), 0);
                advanced = true;
                break;
            }
            n[i] = 0;
        }
        if (!advanced) break;
    }
    return z;
}

LocalZeta local_zeta(const CurveGerm& g, int bound) {
    LocalRing ring(g);
    const ValueSemigroup s = value_semigroup(ring);
    return local_zeta(ring, s, bound);
}

MotSeries poincare_series(const LocalZeta& z) { return z.joint.scaled(MotClass::L_power(-(z.delta + 1))); }

Rational CountingSeries::coeff(const std::vector<int>& n) const {
    auto it = terms.find(n);
    return it == terms.end() ? Rational(0) : it->second;
}

CountingSeries counting_specialization(const MotSeries& s, std::int64_t q) {
    CountingSeries out{s.variables(), s.bound(), {}};
    for (const auto& [n, c] : s.terms()) out.terms.emplace(n, c.evaluate(q));
    return out;
}

} // namespace curvesing
