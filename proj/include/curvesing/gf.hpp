#pragma once

/**
 * @file gf.hpp
 * @brief GF(p^m) in Zech-logarithm representation, sized for point counting.
 *
 * An element is its discrete logarithm to a fixed primitive element, with
 * -1 standing for zero.
 */

#include <cstdint>
#include <vector>

namespace curvesing {

class GFq {
public:
    using Elem = std::int32_t;
    static constexpr Elem kZero = -1;
    static constexpr Elem kOne = 0;

    /// Throws std::invalid_argument unless p is prime and p^m <= 2^24.
    GFq(std::uint32_t p, int m);

    std::uint32_t characteristic() const noexcept { return p_; }
    int degree() const noexcept { return m_; }
    std::uint32_t size() const noexcept { return Q_; }

    /// Embedding of the prime field.
    Elem from_prime(std::uint32_t c) const { return prime_log_[c % p_]; }
    /// All field elements, zero first.
    Elem element(std::uint32_t index) const { return index == 0 ? kZero : static_cast<Elem>(index - 1); }

    Elem mul(Elem a, Elem b) const {
        if (a < 0 || b < 0) return kZero;
        const std::uint32_t s = static_cast<std::uint32_t>(a) + static_cast<std::uint32_t>(b);
        return static_cast<Elem>(s >= order_ ? s - order_ : s);
    }
    Elem add(Elem a, Elem b) const {
        if (a < 0) return b;
        if (b < 0) return a;
        std::int64_t diff = static_cast<std::int64_t>(b) - a;
        if (diff < 0) diff += order_;
        const Elem z = zech_[diff];
        if (z < 0) return kZero;
        const std::uint32_t s = static_cast<std::uint32_t>(a) + static_cast<std::uint32_t>(z);
        return static_cast<Elem>(s >= order_ ? s - order_ : s);
    }
    Elem pow(Elem a, unsigned e) const {
        if (e == 0) return 0;
        if (a < 0) return kZero;
        return static_cast<Elem>(static_cast<std::uint64_t>(a) * e % order_);
    }

private:
    std::uint32_t p_;
    int m_;
    std::uint32_t Q_;
    std::uint32_t order_;  // Q - 1
    std::vector<Elem> zech_;
    std::vector<Elem> prime_log_;
};

} // namespace curvesing
