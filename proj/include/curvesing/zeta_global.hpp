#pragma once

/**
 * @file zeta_global.hpp
 * @brief Counting-level checks for projective plane curves over F_q: point
 *        counts over extensions, the Weil zeta of the smooth model, the
 *        effective-divisor series and its factorization through the local
 *        zeta functions of the singular points.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "curvesing/curve.hpp"
#include "curvesing/zeta_local.hpp"

namespace curvesing {

struct PointCounts {
    std::uint32_t q = 0;
    /// N[m-1] = #X(F_{q^m}).
    std::vector<std::uint64_t> N;
    /// Same for the smooth model: N_m - r + sum of branch counts.
    std::vector<std::uint64_t> N_smooth;
    int singular = 0;
    int branches = 0;
};

/// Enumerates P^2(F_{q^m}) for m = 1..m_max. Also confirms that every singular
/// point over each extension is one of the listed F_q-rational points.
/// Throws BudgetExceeded (per extension, q^2m + q^m + 1 points), NotTotallyRational.
PointCounts count_points(const GlobalCurve& X, int m_max, std::uint64_t budget = 10'000'000);
PointCounts count_points_serial(const GlobalCurve& X, int m_max, std::uint64_t budget = 10'000'000);

/// #X(F_{q^m}) by brute force over one extension.
std::uint64_t count_points_over(const GlobalCurve& X, int m, bool parallel);

struct WeilZeta {
    std::uint32_t q = 0;
    int genus = 0;
    /// Numerator coefficients c_0 = 1, ..., c_{2g}; denominator (1 - T)(1 - qT).
    std::vector<Integer> numerator;
};

/// Numerator from the log-derivative recursion. Throws InconsistentCounts when
/// the coefficients are not integral, do not vanish beyond degree 2g, violate
/// the functional equation or the Weil bound.
WeilZeta weil_zeta_smooth(const PointCounts& pc, int genus);

/// a_k: number of closed points of degree k, from counts sum_{k|m} k a_k = counts[m-1].
std::vector<Integer> closed_point_tallies(const std::vector<std::uint64_t>& counts);

/// Per singular point data used on both sides of the factorization.
struct SingularData {
    ProjPoint point;
    int branches = 0;
    int delta = 0;
    std::vector<int> conductor;
    LocalZeta zeta;
    /// #I_n(F_q) by total degree |n|, from the jet oracle.
    std::vector<std::uint64_t> oracle_by_degree;
};

/// Local zeta up to `bound` and oracle counts for every singular point of X.
std::vector<SingularData> singular_data(const GlobalCurve& X, int bound, std::uint64_t budget = 10'000'000);

enum class LocalSource { Formula, Oracle };

/// Z(Ca(X), u) up to u^bound: smooth closed points away from the singular
/// locus times, at each singular point, sum_n #I_n u^|n|.
std::vector<Rational> divisor_zeta(const GlobalCurve& X, const std::vector<SingularData>& sing, const PointCounts& pc,
                                   int bound, LocalSource source);

struct UnitIndex {
    std::uint64_t formula = 0;
    std::uint64_t direct = 0;
    std::uint64_t normalization_units = 0;
    std::uint64_t ring_units = 0;
    std::vector<int> truncation;
};

/// (U_normalization : U_ring) as q^delta (1 - 1/q)^(m-1) and by enumeration at
/// truncation conductor + 1. Throws IndexMismatch when they differ.
UnitIndex unit_index(const CurveGerm& g, std::uint64_t budget = 10'000'000);

struct FactorizationReport {
    std::uint32_t q = 0;
    int bound = 0;
    bool equal = false;
    std::optional<int> first_mismatch;
    std::vector<Rational> left;
    std::vector<Rational> right;

    int genus = 0;
    int delta = 0;
    int singular = 0;
    PointCounts counts;
    WeilZeta weil;
    /// prod_P (1 - 1/q)^{m_P} / index_P == (1 - 1/q)^r q^-delta
    bool unit_index_form = false;
};

/// Left: q^-delta (1 - 1/q)^r Z(Ca(X), u) with oracle local factors.
/// Right: (1 - 1/q)^r q^-delta Z_Weil(u) prod_P (1 - u)^{m_P} Z(qu, O_P) with
/// formula local factors.
FactorizationReport verify_global_factorization(const GlobalCurve& X, int bound, std::uint64_t budget = 10'000'000);

} // namespace curvesing
