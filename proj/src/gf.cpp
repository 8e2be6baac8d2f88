#include "curvesing/gf.hpp"

#include <stdexcept>

#include "curvesing/field.hpp"

namespace curvesing {

namespace {

// Elements of F_p[x]/(poly) as base-p integers, digit i = coefficient of x^i.
std::uint32_t times_x(std::uint32_t v, const std::vector<std::uint32_t>& poly, std::uint32_t p, int m,
                      std::uint32_t top) {
    const std::uint32_t lead = v / top;
    std::uint32_t shifted = (v % top) * p;
    if (lead == 0) return shifted;
    // x^m = -sum poly[i] x^i
    std::uint32_t out = 0, w = 1;
    for (int i = 0; i < m; ++i) {
        const std::uint32_t digit = (shifted / w) % p;
        const std::uint32_t sub = (lead * poly[i]) % p;
        out += ((digit + p - sub) % p) * w;
        w *= p;
    }
    return out;
}

} // namespace

GFq::GFq(std::uint32_t p, int m) : p_(p), m_(m) {
    if (!is_prime(p)) throw std::invalid_argument("GF(p^m) needs a prime p");
    if (m < 1) throw std::invalid_argument("GF(p^m) needs m >= 1");
    std::uint64_t Q = 1;
    for (int i = 0; i < m; ++i) {
        Q *= p;
        if (Q > (1u << 24)) throw std::invalid_argument("GF(p^m) too large for table arithmetic");
    }
    Q_ = static_cast<std::uint32_t>(Q);
    order_ = Q_ - 1;
    const std::uint32_t top = Q_ / p;

    // Search monic poly = x^m + sum_{i<m} c_i x^i for which x has order Q - 1.
    std::vector<Elem> log(Q_, kZero);
    std::vector<std::uint32_t> exp(order_);
    std::vector<std::uint32_t> poly(m);
    bool found = false;
    for (std::uint32_t code = 0; code < Q_ && !found; ++code) {
        std::uint32_t c = code;
        for (int i = 0; i < m; ++i) {
            poly[i] = c % p;
            c /= p;
        }
        if (poly[0] == 0) continue;
        // x as an element: for m = 1 it is the constant -c_0.
        const std::uint32_t gen = m == 1 ? (p - poly[0]) % p : p;
        std::uint32_t v = 1;
        std::uint32_t k = 0;
        bool ok = true;
        for (; k < order_; ++k) {
            if (k > 0 && v == 1) {
                ok = false;
                break;
            }
            exp[k] = v;
            v = m == 1 ? static_cast<std::uint32_t>(std::uint64_t(v) * gen % p) : times_x(v, poly, p, m, top);
        }
        if (ok && v == 1) found = true;
    }
    if (!found) throw std::logic_error("no primitive polynomial found");
    for (std::uint32_t k = 0; k < order_; ++k) log[exp[k]] = static_cast<Elem>(k);

    zech_.assign(order_, kZero);
    for (std::uint32_t k = 0; k < order_; ++k) {
        const std::uint32_t v = exp[k];
        const std::uint32_t one_plus = (v - v % p) + (v % p + 1) % p;
        zech_[k] = log[one_plus];
    }
    prime_log_.assign(p, kZero);
    for (std::uint32_t c = 1; c < p; ++c) prime_log_[c] = log[c];
}

} // namespace curvesing
